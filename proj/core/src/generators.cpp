#include "tglab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

#include "tglab/errors.hpp"
#include "tglab/graph_io.hpp"
#include "tglab/rng.hpp"

namespace tglab::gen {
namespace {

constexpr int kManifestVersion = 1;

int distinct_count(const std::vector<int>& values) {
  return static_cast<int>(std::set<int>(values.begin(), values.end()).size());
}

// Draws a uniformly random surjection of horizon steps onto the given skip
// values by rejection.
std::vector<int> random_surjection(Rng& rng, const std::vector<int>& onto, int horizon) {
  std::vector<int> steps(horizon);
  while (true) {
    std::set<int> used;
    for (int t = 0; t < horizon; ++t) {
      steps[t] = onto[rng.index(onto.size())];
      used.insert(steps[t]);
    }
    if (static_cast<int>(used.size()) == static_cast<int>(onto.size())) return steps;
  }
}

std::vector<int> sample_skips(Rng& rng, const std::vector<int>& candidates, int label,
                              int horizon) {
  std::vector<int> pool = candidates;
  for (int i = 0; i < label; ++i) {
    std::swap(pool[i], pool[i + rng.index(pool.size() - i)]);
  }
  std::vector<int> subset(pool.begin(), pool.begin() + label);
  std::sort(subset.begin(), subset.end());
  return random_surjection(rng, subset, horizon);
}

}  // namespace

SnapshotGraph csl(int n, int skip) {
  if (n < 3) throw InvalidInputError("csl needs at least 3 nodes");
  if (skip < 1 || skip > n - 1) {
    throw InvalidInputError("csl skip " + std::to_string(skip) +
                            " out of range [1, " + std::to_string(n - 1) + "]");
  }
  SnapshotGraph g(n, /*directed=*/false);
  for (int i = 0; i < n; ++i) g.set_node_attr(i, 1);
  for (int i = 0; i < n; ++i) {
    g.set_edge(i, (i + 1) % n, 1);
    g.set_edge(i, (i + skip) % n, 1);
  }
  return g;
}

DynCslSample dyncsl_sample(int n, const std::vector<int>& skips) {
  if (skips.empty()) throw InvalidInputError("dyncsl sample needs at least one step");
  std::vector<SnapshotGraph> snapshots;
  snapshots.reserve(skips.size());
  for (int s : skips) {
    if (s < 2 || s > n - 2) {
      throw InvalidInputError("dyncsl skip " + std::to_string(s) +
                              " out of range [2, " + std::to_string(n - 2) + "]");
    }
    snapshots.push_back(csl(n, s));
  }
  return {aggregate(snapshots), skips, distinct_count(skips)};
}

DynCslDataset dyncsl_dataset(std::uint64_t seed, const DynCslConfig& cfg) {
  if (cfg.count < 1) throw InvalidInputError("dataset count must be positive");
  if (cfg.horizon < 1) throw InvalidInputError("dataset horizon must be positive");
  if (cfg.folds < 1) throw InvalidInputError("dataset needs at least one fold");
  if (cfg.candidates.empty()) throw InvalidInputError("dataset needs candidate skips");
  std::vector<int> candidates = cfg.candidates;
  std::sort(candidates.begin(), candidates.end());
  if (std::adjacent_find(candidates.begin(), candidates.end()) != candidates.end()) {
    throw InvalidInputError("candidate skips must be distinct");
  }
  for (int c : candidates) {
    if (c < 2 || c > cfg.num_nodes - 2) {
      throw InvalidInputError("candidate skip " + std::to_string(c) +
                              " out of range [2, " + std::to_string(cfg.num_nodes - 2) + "]");
    }
  }
  const int k = static_cast<int>(candidates.size());
  if (cfg.stratified) {
    if (k > cfg.horizon) {
      throw InvalidInputError("stratified generation needs horizon >= |candidates|");
    }
    if (cfg.count % (k * cfg.folds) != 0) {
      throw InvalidInputError(
          "stratified generation needs count divisible by |candidates| * folds");
    }
  }

  DynCslDataset ds;
  ds.manifest.seed = seed;
  ds.manifest.count = cfg.count;
  ds.manifest.horizon = cfg.horizon;
  ds.manifest.num_nodes = cfg.num_nodes;
  ds.manifest.candidates = candidates;
  ds.manifest.stratified = cfg.stratified;
  ds.manifest.folds = cfg.folds;
  ds.samples.reserve(cfg.count);

  const int per_label = cfg.stratified ? cfg.count / k : 0;
  for (int i = 0; i < cfg.count; ++i) {
    Rng rng(seed ^ static_cast<std::uint64_t>(i));
    std::vector<int> skips;
    int fold;
    if (cfg.stratified) {
      const int label = i / per_label + 1;
      skips = sample_skips(rng, candidates, label, cfg.horizon);
      fold = (i % per_label) % cfg.folds;
    } else {
      skips.reserve(cfg.horizon);
      for (int t = 0; t < cfg.horizon; ++t) {
        skips.push_back(candidates[rng.index(candidates.size())]);
      }
      fold = i % cfg.folds;
    }
    DynCslSample sample = dyncsl_sample(cfg.num_nodes, skips);
    ds.manifest.samples.push_back({i, sample.label, fold});
    ds.samples.push_back(std::move(sample));
  }
  return ds;
}

TemporalGraph foodweb() {
  TemporalGraph g(6, 2, /*directed=*/true);
  for (int i = 0; i < 6; ++i) {
    g.set_node_attr(i, 1, 1);
    g.set_node_attr(i, 2, 1);
  }
  g.set_edge_attr(kLynx, kHare, 1, 1);
  g.set_edge_attr(kOrca, kPenguin, 1, 1);
  g.set_edge_attr(kLynx, kHare, 2, 1);
  g.set_edge_attr(kOrca, kPenguin, 2, 1);
  g.set_edge_attr(kHare, kPlant, 2, 1);
  g.set_edge_attr(kPenguin, kFish, 2, 1);
  return g;
}

TemporalGraph random_temporal(std::uint64_t seed, int num_nodes, int horizon,
                              double edge_prob, const std::vector<AttrValue>& alphabet) {
  if (num_nodes < 0) throw InvalidInputError("negative node count");
  if (horizon < 1) throw InvalidInputError("horizon must be at least 1");
  if (!std::isfinite(edge_prob) || edge_prob < 0.0 || edge_prob > 1.0) {
    throw InvalidInputError("edge probability must lie in [0, 1]");
  }
  if (alphabet.empty()) throw InvalidInputError("attribute alphabet must be nonempty");
  for (const AttrValue& v : alphabet) {
    if (v.is_null()) throw InvalidInputError("attribute alphabet must not contain Null");
  }
  Rng rng(seed);
  TemporalGraph g(num_nodes, horizon, /*directed=*/false);
  for (int i = 0; i < num_nodes; ++i) {
    for (int t = 1; t <= horizon; ++t) {
      g.set_node_attr(i, t, alphabet[rng.index(alphabet.size())]);
    }
  }
  for (int u = 0; u < num_nodes; ++u) {
    for (int v = u + 1; v < num_nodes; ++v) {
      for (int t = 1; t <= horizon; ++t) {
        if (rng.bernoulli(edge_prob)) {
          g.set_edge_attr(u, v, t, alphabet[rng.index(alphabet.size())]);
        }
      }
    }
  }
  return g;
}

std::string manifest_to_json(const DatasetManifest& m) {
  nlohmann::ordered_json j;
  j["version"] = kManifestVersion;
  j["seed"] = m.seed;
  j["count"] = m.count;
  j["horizon"] = m.horizon;
  j["num_nodes"] = m.num_nodes;
  j["candidates"] = m.candidates;
  j["stratified"] = m.stratified;
  j["folds"] = m.folds;
  nlohmann::ordered_json samples = nlohmann::ordered_json::array();
  for (const DatasetManifest::Entry& e : m.samples) {
    nlohmann::ordered_json entry;
    entry["id"] = e.id;
    entry["label"] = e.label;
    entry["fold"] = e.fold;
    samples.push_back(std::move(entry));
  }
  j["samples"] = std::move(samples);
  return j.dump() + "\n";
}

DatasetManifest manifest_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInputError("JSON parse error at byte " + std::to_string(e.byte) + ": " +
                            e.what());
  }
  try {
    if (doc.at("version").get<int>() != kManifestVersion) {
      throw InvalidInputError("unsupported manifest version");
    }
    DatasetManifest m;
    m.seed = doc.at("seed").get<std::uint64_t>();
    m.count = doc.at("count").get<int>();
    m.horizon = doc.at("horizon").get<int>();
    m.num_nodes = doc.at("num_nodes").get<int>();
    m.candidates = doc.at("candidates").get<std::vector<int>>();
    m.stratified = doc.at("stratified").get<bool>();
    m.folds = doc.at("folds").get<int>();
    for (const auto& entry : doc.at("samples")) {
      m.samples.push_back({entry.at("id").get<int>(), entry.at("label").get<int>(),
                           entry.at("fold").get<int>()});
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError(std::string("malformed manifest: ") + e.what());
  }
}

void write_dataset(const DynCslDataset& ds, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_text_file(dir / "manifest.json", manifest_to_json(ds.manifest));
  for (std::size_t i = 0; i < ds.samples.size(); ++i) {
    save_temporal_graph(ds.samples[i].graph,
                        dir / ("sample_" + std::to_string(ds.manifest.samples[i].id) + ".json"));
  }
}

}  // namespace tglab::gen
