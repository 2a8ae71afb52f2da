#include "harness.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tglab/errors.hpp"
#include "tglab/generators.hpp"

namespace tglab::harness {
namespace {

TEST(Decode, ReadsLabelFromPresencePatterns) {
  EXPECT_EQ(dyncsl_decode(gen::dyncsl_sample(19, {2, 2}).graph), 1);
  EXPECT_EQ(dyncsl_decode(gen::dyncsl_sample(19, {2, 3, 3}).graph), 2);
  EXPECT_EQ(dyncsl_decode(gen::dyncsl_sample(19, {6, 2, 4, 3, 5}).graph), 5);
  EXPECT_EQ(dyncsl_decode(gen::dyncsl_sample(19, {4, 4, 4, 4}).graph), 1);
}

TEST(Decode, RejectsEdgelessGraphs) {
  EXPECT_THROW(dyncsl_decode(TemporalGraph(3, 2, false)), InvalidInputError);
}

TEST(Decode, MatchesGeneratorLabelsAcrossDataset) {
  const gen::DynCslDataset ds = gen::dyncsl_dataset(7);
  for (std::size_t i = 0; i < ds.samples.size(); ++i) {
    EXPECT_EQ(dyncsl_decode(ds.samples[i].graph), ds.samples[i].label) << "sample " << i;
  }
}

TEST(Experiment, SeparatesOnlyUnderTimeThen) {
  const ExperimentReport report = run_experiment_dyncsl(7);
  ASSERT_EQ(report.variants.size(), 3u);
  EXPECT_EQ(report.variants[0].first, "time-and");
  EXPECT_EQ(report.variants[1].first, "graph-then-time");
  EXPECT_EQ(report.variants[2].first, "time-then");
  EXPECT_EQ(report.variants[0].second.distinct_digests, 1);
  EXPECT_EQ(report.variants[0].second.distinguished_pairs, 0);
  EXPECT_FALSE(report.variants[0].second.accuracy.has_value());
  EXPECT_EQ(report.variants[1].second.distinct_digests, 1);
  EXPECT_EQ(report.variants[1].second.distinguished_pairs, 0);
  EXPECT_GT(report.variants[2].second.distinct_digests, 1);
  EXPECT_GT(report.variants[2].second.distinguished_pairs, 0);
  ASSERT_TRUE(report.variants[2].second.accuracy.has_value());
  EXPECT_EQ(*report.variants[2].second.accuracy, 1.0);
  ASSERT_EQ(report.samples.size(), 150u);
  for (const SampleRow& row : report.samples) {
    ASSERT_TRUE(row.pred.has_value());
    EXPECT_EQ(*row.pred, row.label);
  }
  EXPECT_EQ(report.runtime_ms, 0);
}

TEST(Experiment, TimeThenDigestsSeparateLabelsExactly) {
  const ExperimentReport report = run_experiment_dyncsl(7);
  std::map<std::uint64_t, std::set<int>> labels_per_digest;
  for (const SampleRow& row : report.samples) {
    labels_per_digest[row.digest].insert(row.label);
  }
  for (const auto& [digest, labels] : labels_per_digest) {
    EXPECT_EQ(labels.size(), 1u);
  }
}

TEST(Experiment, ReportSerializationIsDeterministic) {
  const ExperimentReport a = run_experiment_dyncsl(7);
  const ExperimentReport b = run_experiment_dyncsl(7);
  EXPECT_EQ(report_to_json(a), report_to_json(b));
  EXPECT_EQ(report_to_csv(a), report_to_csv(b));
  const std::string json = report_to_json(a);
  EXPECT_NE(json.find("\"experiment\":\"dyncsl\""), std::string::npos);
  EXPECT_NE(json.find("\"runtime_ms\":0"), std::string::npos);
  EXPECT_NE(json.find("\"accuracy\":null"), std::string::npos);
  const std::string csv = report_to_csv(a);
  EXPECT_EQ(csv.rfind("id,label,pred,digest\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 151);
}

TEST(Checks, AllSuitesPassWithSmallBudgets) {
  for (const std::string suite : {"ordering", "symmetry", "equivariance", "oracle"}) {
    const CheckResult result = run_checks(suite, 10, 11);
    EXPECT_TRUE(result.passed) << suite;
    EXPECT_FALSE(result.lines.empty()) << suite;
  }
}

TEST(Checks, RejectsUnknownSuiteAndBadTrials) {
  EXPECT_THROW(run_checks("nope", 10, 11), InvalidInputError);
  EXPECT_THROW(run_checks("ordering", 0, 11), InvalidInputError);
}

TEST(Corpus, GraphsStayInsideAdvertisedBounds) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const TemporalGraph g = random_corpus_graph(seed);
    EXPECT_GE(g.num_nodes(), 2);
    EXPECT_LE(g.num_nodes(), 12);
    EXPECT_GE(g.horizon(), 1);
    EXPECT_LE(g.horizon(), 4);
    EXPECT_TRUE(validate(g).empty());
    EXPECT_EQ(g, random_corpus_graph(seed));
  }
}

TEST(Corpus, PermutationsAreValidAndSeeded) {
  const Permutation p = random_permutation(3, 8);
  EXPECT_EQ(p.size(), 8);
  EXPECT_EQ(p, random_permutation(3, 8));
  std::set<int> seen(p.map().begin(), p.map().end());
  EXPECT_EQ(seen.size(), 8u);
}

}  // namespace
}  // namespace tglab::harness
