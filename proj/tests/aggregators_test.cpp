#include "tglab/aggregators.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <set>
#include <vector>

#include "tglab/errors.hpp"
#include "tglab/interner.hpp"

namespace tglab::agg {
namespace {

std::vector<double> binary_seq(unsigned mask, int length) {
  std::vector<double> seq(length);
  for (int t = 0; t < length; ++t) seq[t] = (mask >> t) & 1u;
  return seq;
}

std::vector<double> power_weights(int length) {
  std::vector<double> theta(length);
  for (int t = 0; t < length; ++t) theta[t] = std::ldexp(1.0, t);
  return theta;
}

TEST(Sigmoid, MatchesHighPrecisionValues) {
  EXPECT_EQ(sigmoid(0.0), 0.5);
  EXPECT_NEAR(sigmoid(1.0), 0.73105857863000487925, 1e-15);
  EXPECT_NEAR(sigmoid(2.0), 0.88079707797788244406, 1e-15);
  EXPECT_NEAR(sigmoid(5.0), 0.99330714907571514444, 1e-15);
  EXPECT_NEAR(sigmoid(-2.0), 1.0 - 0.88079707797788244406, 1e-15);
}

TEST(Sigmoid, IsMonotone) {
  double prev = sigmoid(-10.0);
  for (double x = -9.5; x <= 10.0; x += 0.5) {
    const double cur = sigmoid(x);
    EXPECT_GT(cur, prev) << "x " << x;
    prev = cur;
  }
}

TEST(DecayEncode, MatchesDirectEvaluation) {
  EXPECT_NEAR(decay_encode({1, 0, 1}, {0.0}), 0.88079707797788244406, 1e-15);
  EXPECT_EQ(decay_encode({0, 0, 0, 0}, {0.7}), 0.5);
  const double lam = 0.25;
  const std::vector<double> seq = {1, 2, 0.5};
  double sum = 0.0;
  for (int t = 1; t <= 3; ++t) sum += std::exp(lam * (3 - t + 1)) * seq[t - 1];
  EXPECT_EQ(decay_encode(seq, {lam}), sigmoid(sum));
}

TEST(DecayEncode, OnesCountIsMonotone) {
  double prev = 0.5;
  for (int k = 1; k <= 8; ++k) {
    const std::vector<double> seq(k, 1.0);
    const double cur = decay_encode(seq, {0.0});
    EXPECT_GT(cur, prev) << "k " << k;
    prev = cur;
  }
}

TEST(DecayEncode, RejectsNonFiniteInput) {
  EXPECT_THROW(decay_encode({std::numeric_limits<double>::quiet_NaN()}, {0.0}),
               InvalidInputError);
  EXPECT_THROW(decay_encode({std::numeric_limits<double>::infinity()}, {0.0}),
               InvalidInputError);
  EXPECT_THROW(decay_encode({1.0}, {std::numeric_limits<double>::quiet_NaN()}),
               InvalidInputError);
}

TEST(WeightedEncode, MatchesDirectEvaluation) {
  EXPECT_NEAR(weighted_encode({1, 0, 1}, {{4, 2, 1}}), 0.99330714907571514444, 1e-15);
  EXPECT_EQ(weighted_encode({7, -3, 2}, {{0, 0, 0}}), 0.5);
}

TEST(WeightedEncode, RequiresMatchingLengths) {
  EXPECT_THROW(weighted_encode({1, 0}, {{1, 2, 3}}), InvalidInputError);
  EXPECT_THROW(weighted_encode({1, 0, 1}, {{1}}), InvalidInputError);
}

TEST(WeightedEncode, PowerWeightsSeparateShortBinarySequences) {
  const WeightParams theta{power_weights(5)};
  std::set<double> outputs;
  for (unsigned mask = 0; mask < 32; ++mask) {
    outputs.insert(weighted_encode(binary_seq(mask, 5), theta));
  }
  EXPECT_EQ(outputs.size(), 32u);
}

TEST(WeightedEncode, PowerWeightsSaturateAtLengthEight) {
  const WeightParams theta{power_weights(8)};
  std::set<double> outputs;
  for (unsigned mask = 0; mask < 256; ++mask) {
    const double out = weighted_encode(binary_seq(mask, 8), theta);
    EXPECT_EQ(out, sigmoid(static_cast<double>(mask)));
    outputs.insert(out);
  }
  // sigmoid(k) rounds to 1.0 in binary64 for every k >= 37, because
  // exp(-37) is below the half-ulp of 1.0; only 38 of the 256 pre-sigmoid
  // integers survive as distinct outputs.
  EXPECT_EQ(outputs.size(), 38u);
  EXPECT_EQ(sigmoid(37.0), 1.0);
  EXPECT_LT(sigmoid(36.0), 1.0);
}

TEST(WeightedEncode, DecayAtZeroEqualsAllOnesWeights) {
  for (unsigned mask = 0; mask < 256; ++mask) {
    const std::vector<double> seq = binary_seq(mask, 8);
    const WeightParams ones{std::vector<double>(8, 1.0)};
    EXPECT_EQ(decay_encode(seq, {0.0}), weighted_encode(seq, ones)) << "mask " << mask;
  }
}

TEST(ExactSeqEncode, IsInjectivePerSession) {
  Session session;
  std::set<ColorId> ids;
  for (unsigned mask = 0; mask < 256; ++mask) {
    AttrSeq seq(8);
    for (int t = 0; t < 8; ++t) {
      if ((mask >> t) & 1u) seq[t] = 1;
    }
    ids.insert(exact_seq_encode(seq, session));
  }
  EXPECT_EQ(ids.size(), 256u);
  EXPECT_EQ(exact_seq_encode({1, AttrValue::null()}, session),
            exact_seq_encode({1, AttrValue::null()}, session));
  EXPECT_NE(exact_seq_encode({1, AttrValue::null()}, session),
            exact_seq_encode({AttrValue::null(), 1}, session));
}

TEST(NumericSeq, MapsNullToZero) {
  const AttrSeq seq = {AttrValue::null(), 3, AttrValue::null(), -2};
  EXPECT_EQ(numeric_seq(seq), (std::vector<double>{0.0, 3.0, 0.0, -2.0}));
  EXPECT_THROW(numeric_seq({AttrValue(std::string("x"))}), InvalidInputError);
}

}  // namespace
}  // namespace tglab::agg
