#ifndef TGLAB_TOOLS_HARNESS_HPP_
#define TGLAB_TOOLS_HARNESS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tglab/generators.hpp"
#include "tglab/graph.hpp"
#include "tglab/wl.hpp"

namespace tglab::harness {

// Reads the label of a DynamicCSL-style graph from its edge presence
// patterns: with P the set of distinct per-edge presence patterns, the label
// is 1 when P holds only the all-present pattern and |P| - 1 otherwise.
// Assumes the cycle edges are present at every step and that distinct skip
// values have disjoint edge sets.
int dyncsl_decode(const TemporalGraph& g);

struct VariantStats {
  std::optional<double> accuracy;
  int distinct_digests = 0;
  // Sample pairs whose whole-graph histograms differ within the shared
  // session, counted on the exact sorted color vectors; not serialized.
  long long distinguished_pairs = 0;
};

struct SampleRow {
  int id = 0;
  int label = 0;
  std::optional<int> pred;
  std::uint64_t digest = 0;  // whole-graph histogram digest, time-then session
};

struct ExperimentReport {
  std::string experiment;
  std::uint64_t seed = 0;
  // Keyed by variant name, in pipeline order.
  std::vector<std::pair<std::string, VariantStats>> variants;
  std::vector<SampleRow> samples;
  // Reports are byte-reproducible for a fixed seed, so no wall-clock time is
  // recorded; the field stays at zero and timing goes to the caller's log.
  std::int64_t runtime_ms = 0;
};

struct ExperimentConfig {
  gen::DynCslConfig dataset;
  int layers = 2;
};

// Generates the dataset for the seed, colors every sample under the
// time-and, graph-then-time and time-then variants (one shared session per
// variant, so digests are comparable across samples), and scores the pattern
// decoder against the generator labels.
ExperimentReport run_experiment_dyncsl(std::uint64_t seed, const ExperimentConfig& cfg = {});

std::string report_to_json(const ExperimentReport& report);
// Per-sample rows as id,label,pred,digest.
std::string report_to_csv(const ExperimentReport& report);

struct CheckResult {
  bool passed = true;
  std::vector<std::string> lines;
};

// Named assertion suites: ordering (scheduled emulation, refinement order and
// the strictness witness), symmetry (food web orbits and colors),
// equivariance (per-node color transport under permutation), oracle
// (circulant criterion vs search, soundness of distinguish). trials scales
// the randomized suites; seed fixes their corpus.
CheckResult run_checks(const std::string& suite, int trials, std::uint64_t seed);

// Random graph in the checks corpus: 2..12 nodes, horizon 1..4, integer
// alphabet of size 1..3, edge density from a small grid.
TemporalGraph random_corpus_graph(std::uint64_t seed);

Permutation random_permutation(std::uint64_t seed, int n);

}  // namespace tglab::harness

#endif  // TGLAB_TOOLS_HARNESS_HPP_
