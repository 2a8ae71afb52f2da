#include "harness.hpp"

#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "tglab/errors.hpp"
#include "tglab/oracle.hpp"
#include "tglab/rng.hpp"

namespace tglab::harness {
namespace {

constexpr std::uint64_t kPermSalt = 0x9e3779b97f4a7c15ull;

const double kEdgeProbGrid[] = {0.15, 0.3, 0.5, 0.7};

std::vector<AttrValue> int_alphabet(int size) {
  std::vector<AttrValue> out;
  out.reserve(size);
  for (int i = 1; i <= size; ++i) out.emplace_back(i);
  return out;
}

struct DigestStats {
  int distinct = 0;
  long long distinguished_pairs = 0;
};

DigestStats digest_stats(const std::vector<std::uint64_t>& digests) {
  std::map<std::uint64_t, long long> counts;
  for (std::uint64_t d : digests) ++counts[d];
  DigestStats out;
  out.distinct = static_cast<int>(counts.size());
  const long long n = static_cast<long long>(digests.size());
  long long same = 0;
  for (const auto& [digest, count] : counts) same += count * (count - 1) / 2;
  out.distinguished_pairs = n * (n - 1) / 2 - same;
  return out;
}

std::string fraction_line(const std::string& what, int ok, int total) {
  return what + ": " + std::to_string(ok) + "/" + std::to_string(total);
}

CheckResult ordering_suite(int trials, std::uint64_t seed) {
  CheckResult out;
  int ok_scheduled = 0;
  int ok_refines = 0;
  for (int i = 0; i < trials; ++i) {
    const TemporalGraph g = random_corpus_graph(seed ^ static_cast<std::uint64_t>(i));
    Session s_and, s_sched, s_then;
    const wl::WlConfig cfg_and{wl::Variant::kTimeAnd, 2, {}};
    const wl::WlConfig cfg_sched{wl::Variant::kScheduled, 2, {}};
    const wl::WlConfig cfg_then{wl::Variant::kTimeThen, 2, {}};
    const Partition p_and = Partition::from_coloring(wl::time_and_wl(g, cfg_and, s_and));
    const Partition p_sched =
        Partition::from_coloring(wl::scheduled_wl(g, cfg_sched, s_sched));
    const Partition p_then =
        Partition::from_coloring(wl::time_then_wl(g, cfg_then, s_then));
    if (p_sched == p_and) ++ok_scheduled;
    if (refines(p_then, p_and)) ++ok_refines;
  }
  out.lines.push_back(
      fraction_line("[ordering] scheduled partition equals time-and", ok_scheduled, trials));
  out.lines.push_back(
      fraction_line("[ordering] time-then refines time-and", ok_refines, trials));

  const TemporalGraph same = gen::dyncsl_sample(19, {2, 2}).graph;
  const TemporalGraph changed = gen::dyncsl_sample(19, {2, 3}).graph;
  const bool and_dist =
      wl::distinguish(same, changed, {wl::Variant::kTimeAnd, 2, {}});
  const bool then_dist =
      wl::distinguish(same, changed, {wl::Variant::kTimeThen, 2, {}});
  out.lines.push_back(std::string("[ordering] witness pair: time-and distinguishes: ") +
                      (and_dist ? "yes" : "no") + " (want no)");
  out.lines.push_back(std::string("[ordering] witness pair: time-then distinguishes: ") +
                      (then_dist ? "yes" : "no") + " (want yes)");
  out.passed = ok_scheduled == trials && ok_refines == trials && !and_dist && then_dist;
  return out;
}

CheckResult symmetry_suite() {
  CheckResult out;
  const TemporalGraph web = gen::foodweb();
  const Partition orbits = oracle::node_orbits(web);
  const Partition expected = Partition::from_colors({0, 1, 2, 0, 1, 2});
  const bool orbits_ok = orbits == expected;
  out.lines.push_back(std::string("[symmetry] orbits pair the chains: ") +
                      (orbits_ok ? "yes" : "no"));
  out.passed = orbits_ok;
  for (const wl::Variant variant :
       {wl::Variant::kTimeAnd, wl::Variant::kGraphThenTime, wl::Variant::kTimeThen,
        wl::Variant::kScheduled}) {
    Session session;
    const Coloring c = wl::run_variant(web, {variant, 2, {}}, session);
    const bool equal = c.colors[gen::kLynx] == c.colors[gen::kOrca] &&
                       c.colors[gen::kHare] == c.colors[gen::kPenguin] &&
                       c.colors[gen::kPlant] == c.colors[gen::kFish];
    // Equal colors make (lynx, penguin) and (orca, penguin) identical inputs
    // to any pair scorer.
    out.lines.push_back("[symmetry] " + std::string(wl::variant_name(variant)) +
                        " colors match across chains: " + (equal ? "yes" : "no"));
    out.passed = out.passed && equal;
  }
  return out;
}

CheckResult equivariance_suite(int trials, std::uint64_t seed) {
  CheckResult out;
  int ok = 0;
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t trial_seed = seed ^ static_cast<std::uint64_t>(i);
    const TemporalGraph g = random_corpus_graph(trial_seed);
    const Permutation perm = random_permutation(trial_seed ^ kPermSalt, g.num_nodes());
    const TemporalGraph h = apply_permutation(g, perm);
    const DisjointUnion u = disjoint_union(g, h);
    bool trial_ok = true;
    for (const wl::Variant variant :
         {wl::Variant::kTimeAnd, wl::Variant::kGraphThenTime, wl::Variant::kTimeThen,
          wl::Variant::kScheduled}) {
      Session session;
      const Coloring c = wl::run_variant(u.graph, {variant, 2, {}}, session);
      for (int node = 0; node < g.num_nodes() && trial_ok; ++node) {
        trial_ok = c.colors[u.map_a[node]] == c.colors[u.map_b[perm(node)]];
      }
      if (!trial_ok) break;
    }
    if (trial_ok) ++ok;
  }
  out.lines.push_back(
      fraction_line("[equivariance] colors transported node by node", ok, trials));
  out.passed = ok == trials;
  return out;
}

CheckResult oracle_suite(int trials, std::uint64_t seed) {
  CheckResult out;
  int criterion_ok = 0;
  int criterion_total = 0;
  for (int s1 = 2; s1 <= 5; ++s1) {
    for (int s2 = 2; s2 <= 5; ++s2) {
      const TemporalGraph a = aggregate({gen::csl(7, s1)});
      const TemporalGraph b = aggregate({gen::csl(7, s2)});
      const oracle::IsoWitness verdict = oracle::brute_force_iso(a, b);
      bool ok = verdict.isomorphic == oracle::csl_iso(7, s1, s2);
      if (verdict.witness) {
        ok = ok && apply_permutation(a, *verdict.witness) == b;
      }
      ++criterion_total;
      if (ok) ++criterion_ok;
    }
  }
  out.lines.push_back(fraction_line("[oracle] circulant criterion matches search at n=7",
                                    criterion_ok, criterion_total));

  int sound = 0;
  for (int i = 0; i < trials; ++i) {
    Rng rng(seed ^ static_cast<std::uint64_t>(i));
    const int n = 2 + static_cast<int>(rng.index(7));
    const int horizon = 1 + static_cast<int>(rng.index(3));
    const double edge_prob = kEdgeProbGrid[rng.index(4)];
    const std::vector<AttrValue> alphabet = int_alphabet(1 + static_cast<int>(rng.index(2)));
    const TemporalGraph a = gen::random_temporal(rng.next(), n, horizon, edge_prob, alphabet);
    TemporalGraph b = rng.bernoulli(0.5)
                          ? apply_permutation(a, random_permutation(rng.next(), n))
                          : gen::random_temporal(rng.next(), n, horizon, edge_prob, alphabet);
    const oracle::IsoWitness verdict = oracle::brute_force_iso(a, b, {8});
    bool trial_sound = !verdict.witness || apply_permutation(a, *verdict.witness) == b;
    std::vector<wl::Variant> variants = {wl::Variant::kTimeAnd, wl::Variant::kGraphThenTime,
                                         wl::Variant::kTimeThen, wl::Variant::kScheduled};
    if (horizon == 1) variants.push_back(wl::Variant::kStatic);
    for (const wl::Variant variant : variants) {
      if (!trial_sound) break;
      if (wl::distinguish(a, b, {variant, 2, {}}) && verdict.isomorphic) {
        trial_sound = false;
      }
    }
    if (trial_sound) ++sound;
  }
  out.lines.push_back(
      fraction_line("[oracle] distinguish implies non-isomorphic", sound, trials));
  out.passed = criterion_ok == criterion_total && sound == trials;
  return out;
}

}  // namespace

int dyncsl_decode(const TemporalGraph& g) {
  if (g.edges().empty()) {
    throw InvalidInputError("cannot decode a graph without edges");
  }
  std::set<std::vector<bool>> patterns;
  for (const auto& [key, seq] : g.edges()) {
    if (!g.directed() && key.first > key.second) continue;
    std::vector<bool> pattern(g.horizon());
    for (int t = 0; t < g.horizon(); ++t) pattern[t] = !seq[t].is_null();
    patterns.insert(std::move(pattern));
  }
  const std::vector<bool> all_present(g.horizon(), true);
  if (patterns.size() == 1 && *patterns.begin() == all_present) return 1;
  return static_cast<int>(patterns.size()) - 1;
}

ExperimentReport run_experiment_dyncsl(std::uint64_t seed, const ExperimentConfig& cfg) {
  const gen::DynCslDataset ds = gen::dyncsl_dataset(seed, cfg.dataset);
  ExperimentReport report;
  report.experiment = "dyncsl";
  report.seed = seed;

  std::vector<int> preds;
  preds.reserve(ds.samples.size());
  int correct = 0;
  for (const gen::DynCslSample& sample : ds.samples) {
    preds.push_back(dyncsl_decode(sample.graph));
    if (preds.back() == sample.label) ++correct;
  }

  std::vector<std::uint64_t> time_then_digests;
  for (const wl::Variant variant :
       {wl::Variant::kTimeAnd, wl::Variant::kGraphThenTime, wl::Variant::kTimeThen}) {
    Session session;
    std::vector<std::uint64_t> digests;
    digests.reserve(ds.samples.size());
    std::map<std::vector<ColorId>, long long> histogram_counts;
    for (const gen::DynCslSample& sample : ds.samples) {
      const Coloring c = wl::run_variant(sample.graph, {variant, cfg.layers, {}}, session);
      digests.push_back(wl::histogram_digest(c.colors));
      ++histogram_counts[wl::sorted_colors(c.colors)];
    }
    const DigestStats stats = digest_stats(digests);
    VariantStats vs;
    vs.distinct_digests = stats.distinct;
    const long long n = static_cast<long long>(ds.samples.size());
    long long same = 0;
    for (const auto& [colors, count] : histogram_counts) same += count * (count - 1) / 2;
    vs.distinguished_pairs = n * (n - 1) / 2 - same;
    if (variant == wl::Variant::kTimeThen) {
      vs.accuracy = ds.samples.empty()
                        ? 1.0
                        : static_cast<double>(correct) / static_cast<double>(ds.samples.size());
      time_then_digests = digests;
    }
    report.variants.emplace_back(std::string(wl::variant_name(variant)), vs);
  }

  for (std::size_t i = 0; i < ds.samples.size(); ++i) {
    report.samples.push_back({ds.manifest.samples[i].id, ds.manifest.samples[i].label,
                              preds[i], time_then_digests[i]});
  }
  return report;
}

std::string report_to_json(const ExperimentReport& report) {
  nlohmann::ordered_json j;
  j["experiment"] = report.experiment;
  j["seed"] = report.seed;
  nlohmann::ordered_json variants = nlohmann::ordered_json::object();
  for (const auto& [name, stats] : report.variants) {
    nlohmann::ordered_json v;
    if (stats.accuracy) {
      v["accuracy"] = *stats.accuracy;
    } else {
      v["accuracy"] = nullptr;
    }
    v["distinct_digests"] = stats.distinct_digests;
    variants[name] = std::move(v);
  }
  j["variants"] = std::move(variants);
  nlohmann::ordered_json samples = nlohmann::ordered_json::array();
  for (const SampleRow& row : report.samples) {
    nlohmann::ordered_json r;
    r["id"] = row.id;
    r["label"] = row.label;
    if (row.pred) {
      r["pred"] = *row.pred;
    } else {
      r["pred"] = nullptr;
    }
    r["digest"] = wl::digest_hex(row.digest);
    samples.push_back(std::move(r));
  }
  j["samples"] = std::move(samples);
  j["runtime_ms"] = report.runtime_ms;
  return j.dump() + "\n";
}

std::string report_to_csv(const ExperimentReport& report) {
  std::string out = "id,label,pred,digest\n";
  for (const SampleRow& row : report.samples) {
    out += std::to_string(row.id) + "," + std::to_string(row.label) + ",";
    if (row.pred) out += std::to_string(*row.pred);
    out += "," + wl::digest_hex(row.digest) + "\n";
  }
  return out;
}

CheckResult run_checks(const std::string& suite, int trials, std::uint64_t seed) {
  if (trials < 1) throw InvalidInputError("trials must be at least 1");
  if (suite == "ordering") return ordering_suite(trials, seed);
  if (suite == "symmetry") return symmetry_suite();
  if (suite == "equivariance") return equivariance_suite(trials, seed);
  if (suite == "oracle") return oracle_suite(trials, seed);
  throw InvalidInputError("unknown suite \"" + suite +
                          "\"; expected ordering, symmetry, equivariance or oracle");
}

TemporalGraph random_corpus_graph(std::uint64_t seed) {
  Rng rng(seed);
  const int n = 2 + static_cast<int>(rng.index(11));
  const int horizon = 1 + static_cast<int>(rng.index(4));
  const double edge_prob = kEdgeProbGrid[rng.index(4)];
  const std::vector<AttrValue> alphabet = int_alphabet(1 + static_cast<int>(rng.index(3)));
  return gen::random_temporal(rng.next(), n, horizon, edge_prob, alphabet);
}

Permutation random_permutation(std::uint64_t seed, int n) {
  std::vector<int> map(n);
  for (int i = 0; i < n; ++i) map[i] = i;
  Rng rng(seed);
  rng.shuffle(map);
  return Permutation(std::move(map));
}

}  // namespace tglab::harness
