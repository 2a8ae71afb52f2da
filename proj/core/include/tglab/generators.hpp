#ifndef TGLAB_GENERATORS_HPP_
#define TGLAB_GENERATORS_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tglab/graph.hpp"

namespace tglab::gen {

// Circulant graph on n nodes with cycle edges {i, i+1} and skip edges
// {i, i+skip}, indices mod n, stored as a simple undirected graph (coinciding
// cycle and skip edges are deduplicated). Nodes and edges carry the unit
// attribute 1.
SnapshotGraph csl(int n, int skip);

// A temporal stack of circulants sharing the cycle, one skip value per step.
// The label counts distinct skip values. Skip values s and s' with
// s equivalent to +/- s' mod n share an edge set and should not be mixed.
struct DynCslSample {
  TemporalGraph graph;
  std::vector<int> skips;
  int label;
};

// Requires 2 <= skip <= n-2 for every step, keeping each snapshot 4-regular.
DynCslSample dyncsl_sample(int n, const std::vector<int>& skips);

struct DatasetManifest {
  std::uint64_t seed = 0;
  int count = 0;
  int horizon = 0;
  int num_nodes = 0;
  std::vector<int> candidates;
  bool stratified = true;
  int folds = 10;
  struct Entry {
    int id;
    int label;
    int fold;
  };
  std::vector<Entry> samples;
};

struct DynCslDataset {
  DatasetManifest manifest;
  std::vector<DynCslSample> samples;
};

struct DynCslConfig {
  int count = 150;
  int horizon = 8;
  int num_nodes = 19;
  std::vector<int> candidates = {2, 3, 4, 5, 6};
  bool stratified = true;
  int folds = 10;
};

// Deterministic dataset generation; sample i draws from an engine seeded with
// seed XOR i, so samples are independent of generation order. Stratified mode
// emits count / |candidates| samples per label value and balances labels
// across folds exactly, which requires count to be a multiple of
// |candidates| * folds and |candidates| <= horizon.
DynCslDataset dyncsl_dataset(std::uint64_t seed, const DynCslConfig& cfg = {});

// Two disjoint directed predator chains over horizon 2: at step 1 only the
// apex edges exist, at step 2 the mid-chain edges appear as well. Uniform
// node attributes; the two chains are exchanged by an automorphism.
TemporalGraph foodweb();

inline constexpr int kLynx = 0;
inline constexpr int kHare = 1;
inline constexpr int kPlant = 2;
inline constexpr int kOrca = 3;
inline constexpr int kPenguin = 4;
inline constexpr int kFish = 5;

// Undirected G(n, edge_prob) drawn independently per step; every node and
// every present edge draws an attribute uniformly from alphabet, whose
// symbols must not be Null.
TemporalGraph random_temporal(std::uint64_t seed, int num_nodes, int horizon,
                              double edge_prob, const std::vector<AttrValue>& alphabet);

std::string manifest_to_json(const DatasetManifest& m);
DatasetManifest manifest_from_json(std::string_view text);

// Writes manifest.json plus sample_<id>.json files into dir, creating it if
// needed.
void write_dataset(const DynCslDataset& ds, const std::filesystem::path& dir);

}  // namespace tglab::gen

#endif  // TGLAB_GENERATORS_HPP_
