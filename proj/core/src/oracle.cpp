#include "tglab/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "tglab/errors.hpp"

namespace tglab::oracle {
namespace {

// Permutation-invariant per-node key: attribute sequence plus per-step
// (out-degree, in-degree). Nodes may only map to nodes with an equal key.
std::string node_key(const TemporalGraph& g, int i) {
  std::string key;
  for (const AttrValue& v : g.node_seq(i)) v.encode(&key);
  std::vector<int> degrees(2 * g.horizon(), 0);
  for (const auto& [edge, seq] : g.edges()) {
    for (int t = 0; t < g.horizon(); ++t) {
      if (seq[t].is_null()) continue;
      if (edge.first == i) ++degrees[2 * t];
      if (edge.second == i) ++degrees[2 * t + 1];
    }
  }
  for (int d : degrees) key += std::to_string(d) + ",";
  return key;
}

// Backtracking over key-compatible assignments with incremental edge
// consistency. Calls on_found for every full match until it returns false.
void search_isomorphisms(const TemporalGraph& a, const TemporalGraph& b,
                         const std::function<bool(const std::vector<int>&)>& on_found) {
  const int n = a.num_nodes();
  std::vector<std::string> keys_b(n);
  for (int i = 0; i < n; ++i) keys_b[i] = node_key(b, i);
  std::vector<std::vector<int>> candidates(n);
  for (int i = 0; i < n; ++i) {
    const std::string key = node_key(a, i);
    for (int m = 0; m < n; ++m) {
      if (keys_b[m] == key) candidates[i].push_back(m);
    }
    if (candidates[i].empty()) return;
  }

  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  bool stop = false;
  std::function<void(int)> assign = [&](int i) {
    if (stop) return;
    if (i == n) {
      if (!on_found(image)) stop = true;
      return;
    }
    for (int m : candidates[i]) {
      if (used[m]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        ok = a.edge_seq(i, j) == b.edge_seq(m, image[j]) &&
             a.edge_seq(j, i) == b.edge_seq(image[j], m);
      }
      if (!ok) continue;
      image[i] = m;
      used[m] = true;
      assign(i + 1);
      used[m] = false;
      image[i] = -1;
      if (stop) return;
    }
  };
  assign(0);
}

void check_limit(int n, const OracleConfig& cfg, const char* what) {
  if (n > cfg.node_limit) {
    throw UnsupportedError(std::string(what) + " supports at most " +
                           std::to_string(cfg.node_limit) + " nodes, got " +
                           std::to_string(n));
  }
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

IsoWitness brute_force_iso(const TemporalGraph& a, const TemporalGraph& b,
                           const OracleConfig& cfg) {
  if (a.num_nodes() != b.num_nodes() || a.horizon() != b.horizon() ||
      a.directed() != b.directed() || a.num_edges() != b.num_edges()) {
    return {};
  }
  check_limit(a.num_nodes(), cfg, "brute_force_iso");
  IsoWitness out;
  search_isomorphisms(a, b, [&](const std::vector<int>& image) {
    out.isomorphic = true;
    out.witness = Permutation(image);
    return false;
  });
  return out;
}

Partition node_orbits(const TemporalGraph& g, const OracleConfig& cfg) {
  check_limit(g.num_nodes(), cfg, "node_orbits");
  const int n = g.num_nodes();
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  search_isomorphisms(g, g, [&](const std::vector<int>& image) {
    for (int i = 0; i < n; ++i) {
      const int a = find(i);
      const int b = find(image[i]);
      if (a != b) root[std::max(a, b)] = std::min(a, b);
    }
    return true;
  });
  std::vector<ColorId> colors(n);
  for (int i = 0; i < n; ++i) colors[i] = static_cast<ColorId>(find(i));
  return Partition::from_colors(colors);
}

bool csl_iso(int n, int s1, int s2) {
  if (!is_prime(n)) {
    throw InvalidInputError("csl_iso requires a prime modulus, got " + std::to_string(n));
  }
  for (int s : {s1, s2}) {
    if (s < 2 || s > n - 2) {
      throw InvalidInputError("csl_iso skip " + std::to_string(s) +
                              " out of range [2, " + std::to_string(n - 2) + "]");
    }
  }
  const auto mod = [n](long long v) { return static_cast<int>(((v % n) + n) % n); };
  return mod(s2 - s1) == 0 || mod(s2 + s1) == 0 ||
         mod(static_cast<long long>(s1) * s2 - 1) == 0 ||
         mod(static_cast<long long>(s1) * s2 + 1) == 0;
}

std::string canonical_form(const TemporalGraph& g, const OracleConfig& cfg) {
  check_limit(g.num_nodes(), cfg, "canonical_form");
  const int n = g.num_nodes();
  // order[r] is the original node placed at position r; iterating all orders
  // covers all relabelings.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::string best;
  std::string candidate;
  do {
    candidate.clear();
    candidate += std::to_string(n) + "|" + std::to_string(g.horizon()) + "|" +
                 (g.directed() ? "d|" : "u|");
    for (int r = 0; r < n; ++r) {
      for (const AttrValue& v : g.node_seq(order[r])) v.encode(&candidate);
    }
    for (int r1 = 0; r1 < n; ++r1) {
      for (int r2 = 0; r2 < n; ++r2) {
        if (r1 == r2) continue;
        for (const AttrValue& v : g.edge_seq(order[r1], order[r2])) v.encode(&candidate);
      }
    }
    if (best.empty() || candidate < best) best = candidate;
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace tglab::oracle
