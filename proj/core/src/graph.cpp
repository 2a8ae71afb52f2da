#include "tglab/graph.hpp"

#include <algorithm>

#include "tglab/errors.hpp"

namespace tglab {
namespace {

void check_node(int i, int n, const char* what) {
  if (i < 0 || i >= n) {
    throw InvalidInputError(std::string(what) + " node id " + std::to_string(i) +
                            " out of range [0, " + std::to_string(n) + ")");
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (int v : map_) {
    if (v < 0 || v >= static_cast<int>(map_.size()) || seen[v]) {
      throw InvalidInputError("permutation is not a bijection on 0.." +
                              std::to_string(map_.size() ? map_.size() - 1 : 0));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> map(n);
  for (int i = 0; i < n; ++i) map[i] = i;
  return Permutation(std::move(map));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (int i = 0; i < static_cast<int>(map_.size()); ++i) inv[map_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& first) const {
  if (first.size() != size()) {
    throw InvalidInputError("cannot compose permutations of different sizes");
  }
  std::vector<int> out(map_.size());
  for (int i = 0; i < static_cast<int>(map_.size()); ++i) out[i] = map_[first.map_[i]];
  return Permutation(std::move(out));
}

SnapshotGraph::SnapshotGraph(int num_nodes, bool directed)
    : num_nodes_(num_nodes), directed_(directed) {
  if (num_nodes < 0) throw InvalidInputError("negative node count");
  node_attrs_.resize(num_nodes);
}

void SnapshotGraph::set_node_attr(int i, AttrValue value) {
  check_node(i, num_nodes_, "snapshot");
  node_attrs_[i] = std::move(value);
}

const AttrValue& SnapshotGraph::node_attr(int i) const {
  check_node(i, num_nodes_, "snapshot");
  return node_attrs_[i];
}

void SnapshotGraph::set_edge(int u, int v, AttrValue value) {
  check_node(u, num_nodes_, "edge");
  check_node(v, num_nodes_, "edge");
  if (u == v) throw InvalidInputError("self-loop at node " + std::to_string(u));
  if (value.is_null()) throw InvalidInputError("edge attribute must not be Null");
  edges_[{u, v}] = value;
  if (!directed_) edges_[{v, u}] = std::move(value);
}

bool SnapshotGraph::has_edge(int u, int v) const {
  return edges_.count({u, v}) > 0;
}

AttrValue SnapshotGraph::edge_attr(int u, int v) const {
  auto it = edges_.find({u, v});
  return it == edges_.end() ? AttrValue::null() : it->second;
}

int SnapshotGraph::num_edges() const {
  if (directed_) return static_cast<int>(edges_.size());
  return static_cast<int>(edges_.size()) / 2;
}

bool operator==(const SnapshotGraph& a, const SnapshotGraph& b) {
  return a.num_nodes_ == b.num_nodes_ && a.directed_ == b.directed_ &&
         a.node_attrs_ == b.node_attrs_ && a.edges_ == b.edges_;
}

TemporalGraph::TemporalGraph(int num_nodes, int horizon, bool directed)
    : num_nodes_(num_nodes), horizon_(horizon), directed_(directed) {
  if (num_nodes < 0) throw InvalidInputError("negative node count");
  if (horizon < 1) throw InvalidInputError("horizon must be at least 1");
  node_seqs_.assign(num_nodes, AttrSeq(horizon));
  null_seq_.assign(horizon, AttrValue::null());
}

void TemporalGraph::set_node_attr(int i, int t, AttrValue value) {
  check_node(i, num_nodes_, "temporal");
  if (t < 1 || t > horizon_) {
    throw InvalidInputError("time step " + std::to_string(t) + " out of range [1, " +
                            std::to_string(horizon_) + "]");
  }
  node_seqs_[i][t - 1] = std::move(value);
}

const AttrValue& TemporalGraph::node_attr(int i, int t) const {
  return node_seq(i)[t - 1];
}

const AttrSeq& TemporalGraph::node_seq(int i) const {
  check_node(i, num_nodes_, "temporal");
  return node_seqs_[i];
}

void TemporalGraph::set_edge_attr(int u, int v, int t, AttrValue value) {
  check_node(u, num_nodes_, "edge");
  check_node(v, num_nodes_, "edge");
  if (u == v) throw InvalidInputError("self-loop at node " + std::to_string(u));
  if (t < 1 || t > horizon_) {
    throw InvalidInputError("time step " + std::to_string(t) + " out of range [1, " +
                            std::to_string(horizon_) + "]");
  }
  if (value.is_null()) throw InvalidInputError("edge attribute must not be Null");
  auto& seq = edge_seqs_.try_emplace({u, v}, AttrSeq(horizon_)).first->second;
  seq[t - 1] = value;
  if (!directed_) {
    auto& rev = edge_seqs_.try_emplace({v, u}, AttrSeq(horizon_)).first->second;
    rev[t - 1] = std::move(value);
  }
}

bool TemporalGraph::has_edge(int u, int v) const {
  return edge_seqs_.count({u, v}) > 0;
}

const AttrSeq& TemporalGraph::edge_seq(int u, int v) const {
  auto it = edge_seqs_.find({u, v});
  return it == edge_seqs_.end() ? null_seq_ : it->second;
}

const AttrValue& TemporalGraph::edge_attr(int u, int v, int t) const {
  if (t < 1 || t > horizon_) {
    throw InvalidInputError("time step " + std::to_string(t) + " out of range [1, " +
                            std::to_string(horizon_) + "]");
  }
  return edge_seq(u, v)[t - 1];
}

int TemporalGraph::num_edges() const {
  if (directed_) return static_cast<int>(edge_seqs_.size());
  return static_cast<int>(edge_seqs_.size()) / 2;
}

bool operator==(const TemporalGraph& a, const TemporalGraph& b) {
  return a.num_nodes_ == b.num_nodes_ && a.horizon_ == b.horizon_ &&
         a.directed_ == b.directed_ && a.node_seqs_ == b.node_seqs_ &&
         a.edge_seqs_ == b.edge_seqs_;
}

TemporalGraph aggregate(const std::vector<SnapshotGraph>& snapshots) {
  if (snapshots.empty()) throw InvalidInputError("aggregate needs at least one snapshot");
  const int n = snapshots[0].num_nodes();
  const bool directed = snapshots[0].directed();
  for (const SnapshotGraph& s : snapshots) {
    if (s.num_nodes() != n) throw InvalidInputError("snapshots differ in node count");
    if (s.directed() != directed) throw InvalidInputError("snapshots differ in directedness");
  }
  const int horizon = static_cast<int>(snapshots.size());
  TemporalGraph out(n, horizon, directed);
  for (int t = 1; t <= horizon; ++t) {
    const SnapshotGraph& s = snapshots[t - 1];
    for (int i = 0; i < n; ++i) {
      if (!s.node_attr(i).is_null()) out.set_node_attr(i, t, s.node_attr(i));
    }
    for (const auto& [key, attr] : s.edges()) {
      if (!directed && key.first > key.second) continue;
      out.set_edge_attr(key.first, key.second, t, attr);
    }
  }
  return out;
}

SnapshotGraph slice(const TemporalGraph& g, int t) {
  if (t < 1 || t > g.horizon()) {
    throw InvalidInputError("slice step " + std::to_string(t) + " out of range [1, " +
                            std::to_string(g.horizon()) + "]");
  }
  SnapshotGraph out(g.num_nodes(), g.directed());
  for (int i = 0; i < g.num_nodes(); ++i) {
    const AttrValue& v = g.node_attr(i, t);
    if (!v.is_null()) out.set_node_attr(i, v);
  }
  for (const auto& [key, seq] : g.edges()) {
    if (!g.directed() && key.first > key.second) continue;
    if (!seq[t - 1].is_null()) out.set_edge(key.first, key.second, seq[t - 1]);
  }
  return out;
}

TemporalGraph apply_permutation(const TemporalGraph& g, const Permutation& perm) {
  if (perm.size() != g.num_nodes()) {
    throw InvalidInputError("permutation size " + std::to_string(perm.size()) +
                            " does not match node count " + std::to_string(g.num_nodes()));
  }
  TemporalGraph out(g.num_nodes(), g.horizon(), g.directed());
  for (int i = 0; i < g.num_nodes(); ++i) {
    for (int t = 1; t <= g.horizon(); ++t) {
      const AttrValue& v = g.node_attr(i, t);
      if (!v.is_null()) out.set_node_attr(perm(i), t, v);
    }
  }
  for (const auto& [key, seq] : g.edges()) {
    if (!g.directed() && key.first > key.second) continue;
    for (int t = 1; t <= g.horizon(); ++t) {
      if (!seq[t - 1].is_null()) {
        out.set_edge_attr(perm(key.first), perm(key.second), t, seq[t - 1]);
      }
    }
  }
  return out;
}

SnapshotGraph apply_permutation(const SnapshotGraph& g, const Permutation& perm) {
  if (perm.size() != g.num_nodes()) {
    throw InvalidInputError("permutation size " + std::to_string(perm.size()) +
                            " does not match node count " + std::to_string(g.num_nodes()));
  }
  SnapshotGraph out(g.num_nodes(), g.directed());
  for (int i = 0; i < g.num_nodes(); ++i) {
    if (!g.node_attr(i).is_null()) out.set_node_attr(perm(i), g.node_attr(i));
  }
  for (const auto& [key, attr] : g.edges()) {
    if (!g.directed() && key.first > key.second) continue;
    out.set_edge(perm(key.first), perm(key.second), attr);
  }
  return out;
}

DisjointUnion disjoint_union(const TemporalGraph& a, const TemporalGraph& b) {
  if (a.horizon() != b.horizon()) {
    throw InvalidInputError("disjoint union requires equal horizons");
  }
  if (a.directed() != b.directed()) {
    throw InvalidInputError("disjoint union requires equal directedness");
  }
  TemporalGraph g(a.num_nodes() + b.num_nodes(), a.horizon(), a.directed());
  DisjointUnion out{std::move(g), {}, {}};
  auto copy_in = [&](const TemporalGraph& src, int base, std::vector<int>* map) {
    map->resize(src.num_nodes());
    for (int i = 0; i < src.num_nodes(); ++i) {
      (*map)[i] = base + i;
      for (int t = 1; t <= src.horizon(); ++t) {
        const AttrValue& v = src.node_attr(i, t);
        if (!v.is_null()) out.graph.set_node_attr(base + i, t, v);
      }
    }
    for (const auto& [key, seq] : src.edges()) {
      if (!src.directed() && key.first > key.second) continue;
      for (int t = 1; t <= src.horizon(); ++t) {
        if (!seq[t - 1].is_null()) {
          out.graph.set_edge_attr(base + key.first, base + key.second, t, seq[t - 1]);
        }
      }
    }
  };
  copy_in(a, 0, &out.map_a);
  copy_in(b, a.num_nodes(), &out.map_b);
  return out;
}

std::vector<Violation> validate(const TemporalGraph& g) {
  std::vector<Violation> out;
  for (int i = 0; i < g.num_nodes(); ++i) {
    if (static_cast<int>(g.node_seq(i).size()) != g.horizon()) {
      out.push_back({"node " + std::to_string(i), "attribute sequence length mismatch"});
    }
  }
  for (const auto& [key, seq] : g.edges()) {
    const std::string where =
        "edge (" + std::to_string(key.first) + ", " + std::to_string(key.second) + ")";
    if (key.first < 0 || key.first >= g.num_nodes() || key.second < 0 ||
        key.second >= g.num_nodes()) {
      out.push_back({where, "endpoint out of range"});
      continue;
    }
    if (key.first == key.second) out.push_back({where, "self-loop"});
    if (static_cast<int>(seq.size()) != g.horizon()) {
      out.push_back({where, "attribute sequence length mismatch"});
    }
    if (std::all_of(seq.begin(), seq.end(),
                    [](const AttrValue& v) { return v.is_null(); })) {
      out.push_back({where, "edge absent at every step should not be stored"});
    }
    if (!g.directed()) {
      const auto rev = g.edges().find({key.second, key.first});
      if (rev == g.edges().end()) {
        out.push_back({where, "missing symmetric entry"});
      } else if (rev->second != seq) {
        out.push_back({where, "symmetric entries disagree"});
      }
    }
  }
  return out;
}

}  // namespace tglab
