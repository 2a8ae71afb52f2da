#include "tglab/oracle.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "tglab/errors.hpp"
#include "tglab/generators.hpp"
#include "tglab/graph.hpp"

namespace tglab::oracle {
namespace {

TemporalGraph circulant(int n, int skip) { return aggregate({gen::csl(n, skip)}); }

TEST(BruteForce, FindsCirculantIsomorphism) {
  const TemporalGraph a = circulant(7, 2);
  const TemporalGraph b = circulant(7, 3);
  const IsoWitness w = brute_force_iso(a, b);
  ASSERT_TRUE(w.isomorphic);
  ASSERT_TRUE(w.witness.has_value());
  EXPECT_EQ(apply_permutation(a, *w.witness), b);
}

TEST(BruteForce, WitnessIsDeterministic) {
  const TemporalGraph a = circulant(7, 2);
  const TemporalGraph b = circulant(7, 3);
  const IsoWitness w1 = brute_force_iso(a, b);
  const IsoWitness w2 = brute_force_iso(a, b);
  ASSERT_TRUE(w1.witness.has_value());
  EXPECT_EQ(*w1.witness, *w2.witness);
}

TEST(BruteForce, SeparatesCirculantStacks) {
  const TemporalGraph a = gen::dyncsl_sample(7, {2, 2}).graph;
  const TemporalGraph b = gen::dyncsl_sample(7, {2, 3}).graph;
  const IsoWitness w = brute_force_iso(a, b);
  EXPECT_FALSE(w.isomorphic);
  EXPECT_FALSE(w.witness.has_value());
}

TEST(BruteForce, FastPathsOnShapeMismatch) {
  EXPECT_FALSE(brute_force_iso(TemporalGraph(3, 1, false), TemporalGraph(4, 1, false))
                   .isomorphic);
  EXPECT_FALSE(brute_force_iso(TemporalGraph(3, 1, false), TemporalGraph(3, 2, false))
                   .isomorphic);
  EXPECT_FALSE(brute_force_iso(TemporalGraph(3, 1, false), TemporalGraph(3, 1, true))
                   .isomorphic);
  TemporalGraph one_edge(3, 1, false);
  one_edge.set_edge_attr(0, 1, 1, 1);
  EXPECT_FALSE(brute_force_iso(TemporalGraph(3, 1, false), one_edge).isomorphic);
}

TEST(BruteForce, AttributesBlockIsomorphism) {
  TemporalGraph a(2, 1, false);
  TemporalGraph b(2, 1, false);
  a.set_node_attr(0, 1, 1);
  a.set_node_attr(1, 1, 2);
  b.set_node_attr(0, 1, 1);
  b.set_node_attr(1, 1, 3);
  EXPECT_FALSE(brute_force_iso(a, b).isomorphic);
  b.set_node_attr(1, 1, 2);
  EXPECT_TRUE(brute_force_iso(a, b).isomorphic);
}

TEST(BruteForce, PermutedGraphsAreIsomorphic) {
  const TemporalGraph g = gen::random_temporal(21, 7, 2, 0.4, {1, 2});
  const Permutation perm({4, 2, 6, 0, 3, 5, 1});
  const IsoWitness w = brute_force_iso(g, apply_permutation(g, perm));
  ASSERT_TRUE(w.isomorphic);
  EXPECT_EQ(apply_permutation(g, *w.witness), apply_permutation(g, perm));
}

TEST(BruteForce, EnforcesNodeLimit) {
  const TemporalGraph big(10, 1, false);
  EXPECT_THROW(brute_force_iso(big, big), UnsupportedError);
  EXPECT_NO_THROW(brute_force_iso(big, big, {10}));
  EXPECT_THROW(node_orbits(big), UnsupportedError);
  EXPECT_THROW(canonical_form(big), UnsupportedError);
}

TEST(Orbits, PathsPairMirrorNodes) {
  TemporalGraph p3(3, 1, false);
  p3.set_edge_attr(0, 1, 1, 1);
  p3.set_edge_attr(1, 2, 1, 1);
  EXPECT_EQ(node_orbits(p3), Partition::from_colors({0, 1, 0}));
  TemporalGraph p4(4, 1, false);
  p4.set_edge_attr(0, 1, 1, 1);
  p4.set_edge_attr(1, 2, 1, 1);
  p4.set_edge_attr(2, 3, 1, 1);
  EXPECT_EQ(node_orbits(p4), Partition::from_colors({0, 1, 1, 0}));
}

TEST(Orbits, CirculantIsVertexTransitive) {
  EXPECT_EQ(node_orbits(circulant(7, 2)).num_classes(), 1);
}

TEST(Orbits, FoodwebPairsTheChains) {
  EXPECT_EQ(node_orbits(gen::foodweb()), Partition::from_colors({0, 1, 2, 0, 1, 2}));
}

TEST(CslIso, MultiplierCriterionAtSeven) {
  for (int s1 = 2; s1 <= 5; ++s1) {
    for (int s2 = 2; s2 <= 5; ++s2) {
      EXPECT_TRUE(csl_iso(7, s1, s2)) << s1 << "," << s2;
    }
  }
}

TEST(CslIso, MultiplierCriterionAtNineteen) {
  EXPECT_TRUE(csl_iso(19, 2, 2));
  EXPECT_TRUE(csl_iso(19, 4, 5));
  EXPECT_TRUE(csl_iso(19, 3, 6));
  EXPECT_TRUE(csl_iso(19, 2, 9));
  EXPECT_FALSE(csl_iso(19, 2, 3));
  EXPECT_FALSE(csl_iso(19, 2, 5));
  EXPECT_FALSE(csl_iso(19, 3, 5));
}

TEST(CslIso, AgreesWithSearchAtSeven) {
  for (int s1 = 2; s1 <= 5; ++s1) {
    for (int s2 = 2; s2 <= 5; ++s2) {
      const bool expected = brute_force_iso(circulant(7, s1), circulant(7, s2)).isomorphic;
      EXPECT_EQ(csl_iso(7, s1, s2), expected) << s1 << "," << s2;
    }
  }
}

TEST(CslIso, RejectsBadParameters) {
  EXPECT_THROW(csl_iso(9, 2, 3), InvalidInputError);
  EXPECT_THROW(csl_iso(7, 1, 3), InvalidInputError);
  EXPECT_THROW(csl_iso(7, 2, 6), InvalidInputError);
}

TEST(CanonicalForm, InvariantUnderPermutation) {
  const TemporalGraph g = gen::random_temporal(9, 6, 2, 0.5, {1, 2});
  const Permutation perm({5, 3, 1, 0, 4, 2});
  EXPECT_EQ(canonical_form(g), canonical_form(apply_permutation(g, perm)));
}

TEST(CanonicalForm, MatchesIsomorphismVerdicts) {
  EXPECT_EQ(canonical_form(circulant(7, 2)), canonical_form(circulant(7, 3)));
  EXPECT_NE(canonical_form(gen::dyncsl_sample(7, {2, 2}).graph),
            canonical_form(gen::dyncsl_sample(7, {2, 3}).graph));
}

}  // namespace
}  // namespace tglab::oracle
