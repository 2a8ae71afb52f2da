#ifndef TGLAB_GRAPH_HPP_
#define TGLAB_GRAPH_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tglab/attr.hpp"

namespace tglab {

using EdgeKey = std::pair<int, int>;

// A bijection on node ids 0..n-1. apply_permutation moves node i to map()[i].
class Permutation {
 public:
  explicit Permutation(std::vector<int> map);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int i) const { return map_[i]; }
  const std::vector<int>& map() const { return map_; }

  Permutation inverse() const;
  // Composition acting left to right on a graph: applying *this after first
  // equals applying compose(first).
  Permutation compose(const Permutation& first) const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.map_ == b.map_;
  }

 private:
  std::vector<int> map_;
};

// One time step: node attributes plus attributed edges. Undirected graphs
// store every edge in both directions; writers iterate the canonical (u < v)
// entries. Edge attributes are never Null, absence is encoded by omission.
class SnapshotGraph {
 public:
  SnapshotGraph(int num_nodes, bool directed);

  int num_nodes() const { return num_nodes_; }
  bool directed() const { return directed_; }

  void set_node_attr(int i, AttrValue value);
  const AttrValue& node_attr(int i) const;
  const std::vector<AttrValue>& node_attrs() const { return node_attrs_; }

  void set_edge(int u, int v, AttrValue value);
  bool has_edge(int u, int v) const;
  AttrValue edge_attr(int u, int v) const;  // Null when absent
  const std::map<EdgeKey, AttrValue>& edges() const { return edges_; }
  // Stored entry count for directed graphs, canonical pair count otherwise.
  int num_edges() const;

  friend bool operator==(const SnapshotGraph& a, const SnapshotGraph& b);

 private:
  int num_nodes_;
  bool directed_;
  std::vector<AttrValue> node_attrs_;
  std::map<EdgeKey, AttrValue> edges_;
};

// A temporal graph over a fixed node set and horizon T: per-node attribute
// sequences of length T and per-edge attribute sequences with Null at the
// steps where the edge is absent. Time steps are 1-based throughout.
class TemporalGraph {
 public:
  TemporalGraph(int num_nodes, int horizon, bool directed);

  int num_nodes() const { return num_nodes_; }
  int horizon() const { return horizon_; }
  bool directed() const { return directed_; }

  void set_node_attr(int i, int t, AttrValue value);
  const AttrValue& node_attr(int i, int t) const;
  const AttrSeq& node_seq(int i) const;

  void set_edge_attr(int u, int v, int t, AttrValue value);
  bool has_edge(int u, int v) const;
  // Full sequence for a stored edge; an all-Null sequence when absent.
  const AttrSeq& edge_seq(int u, int v) const;
  const AttrValue& edge_attr(int u, int v, int t) const;
  const std::map<EdgeKey, AttrSeq>& edges() const { return edge_seqs_; }
  int num_edges() const;

  friend bool operator==(const TemporalGraph& a, const TemporalGraph& b);

 private:
  int num_nodes_;
  int horizon_;
  bool directed_;
  std::vector<AttrSeq> node_seqs_;
  std::map<EdgeKey, AttrSeq> edge_seqs_;
  AttrSeq null_seq_;
};

struct Violation {
  std::string where;
  std::string message;
};

struct DisjointUnion {
  TemporalGraph graph;
  std::vector<int> map_a;  // original node id -> union node id
  std::vector<int> map_b;
};

// Stacks equal-sized snapshots into a temporal graph; an edge sequence holds
// Null at the steps where the edge is missing. Edges absent at every step are
// not stored.
TemporalGraph aggregate(const std::vector<SnapshotGraph>& snapshots);

// Extracts step t (1-based) as a snapshot.
SnapshotGraph slice(const TemporalGraph& g, int t);

TemporalGraph apply_permutation(const TemporalGraph& g, const Permutation& perm);
SnapshotGraph apply_permutation(const SnapshotGraph& g, const Permutation& perm);

DisjointUnion disjoint_union(const TemporalGraph& a, const TemporalGraph& b);

// Structural checks: sequence lengths, endpoint ranges, symmetry of undirected
// storage, no all-Null edge sequences, no self-loops. Empty result means valid.
std::vector<Violation> validate(const TemporalGraph& g);

}  // namespace tglab

#endif  // TGLAB_GRAPH_HPP_
