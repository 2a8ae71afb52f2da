#ifndef TGLAB_ORACLE_HPP_
#define TGLAB_ORACLE_HPP_

#include <optional>
#include <string>

#include "tglab/coloring.hpp"
#include "tglab/graph.hpp"

namespace tglab::oracle {

struct OracleConfig {
  // Exhaustive searches refuse graphs with more nodes than this.
  int node_limit = 9;
};

struct IsoWitness {
  bool isomorphic = false;
  // Present iff isomorphic: apply_permutation(a, *witness) == b, and the
  // witness is the lexicographically least such permutation.
  std::optional<Permutation> witness;
};

// Exact temporal-graph isomorphism by pruned permutation search. Mismatched
// node counts, horizons, directedness or per-node invariants give a fast
// negative verdict; equal node counts above the limit raise UnsupportedError.
IsoWitness brute_force_iso(const TemporalGraph& a, const TemporalGraph& b,
                           const OracleConfig& cfg = {});

// Automorphism orbits from exhaustive enumeration, as a partition of nodes.
Partition node_orbits(const TemporalGraph& g, const OracleConfig& cfg = {});

// Number-theoretic isomorphism criterion for the circulant family: for prime
// n and 2 <= s1, s2 <= n-2, the graphs with skips s1 and s2 are isomorphic
// iff s2 = +/- s1 (mod n) or s1 * s2 = +/- 1 (mod n).
bool csl_iso(int n, int s1, int s2);

// Lexicographically minimal serialization over all node permutations. Equal
// canonical forms characterize isomorphism.
std::string canonical_form(const TemporalGraph& g, const OracleConfig& cfg = {});

}  // namespace tglab::oracle

#endif  // TGLAB_ORACLE_HPP_
