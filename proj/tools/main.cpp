#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "harness.hpp"
#include "tglab/errors.hpp"
#include "tglab/generators.hpp"
#include "tglab/graph_io.hpp"
#include "tglab/oracle.hpp"
#include "tglab/wl.hpp"

namespace {

using tglab::TemporalGraph;

constexpr const char* kVariantNames[] = {"static", "time-and", "graph-then-time",
                                         "time-then", "scheduled"};

tglab::wl::WlConfig make_config(const std::string& variant, int layers, int iterations) {
  tglab::wl::WlConfig cfg;
  cfg.variant = tglab::wl::variant_from_name(variant);
  cfg.layers = layers;
  if (iterations >= 0) cfg.iterations = iterations;
  return cfg;
}

int run(int argc, char** argv) {
  CLI::App app{"temporal graph expressiveness laboratory"};
  app.require_subcommand(1);

  // gen
  CLI::App* gen = app.add_subcommand("gen", "generate graphs and datasets");
  gen->require_subcommand(1);

  int csl_n = 19;
  int csl_skip = 2;
  std::string csl_out;
  CLI::App* gen_csl = gen->add_subcommand("csl", "one circulant snapshot as a horizon-1 graph");
  gen_csl->add_option("--n", csl_n, "node count")->capture_default_str();
  gen_csl->add_option("--skip", csl_skip, "skip value")->capture_default_str();
  gen_csl->add_option("--out", csl_out, "output graph file")->required();

  std::uint64_t dyn_seed = 7;
  tglab::gen::DynCslConfig dyn_cfg;
  std::string dyn_out_dir;
  CLI::App* gen_dyn = gen->add_subcommand("dynamic-csl", "labeled dataset of circulant stacks");
  gen_dyn->add_option("--seed", dyn_seed, "dataset seed")->capture_default_str();
  gen_dyn->add_option("--count", dyn_cfg.count, "sample count")->capture_default_str();
  gen_dyn->add_option("--horizon", dyn_cfg.horizon, "steps per sample")->capture_default_str();
  gen_dyn->add_option("--n", dyn_cfg.num_nodes, "nodes per sample")->capture_default_str();
  gen_dyn->add_option("--candidates", dyn_cfg.candidates, "candidate skip values")
      ->delimiter(',')
      ->capture_default_str();
  gen_dyn->add_option("--folds", dyn_cfg.folds, "fold count")->capture_default_str();
  gen_dyn->add_flag("--stratified,!--no-stratified", dyn_cfg.stratified,
                    "balance labels exactly")
      ->capture_default_str();
  gen_dyn->add_option("--out-dir", dyn_out_dir, "output directory")->required();

  std::string foodweb_out;
  CLI::App* gen_web = gen->add_subcommand("foodweb", "two-chain directed example");
  gen_web->add_option("--out", foodweb_out, "output graph file")->required();

  std::uint64_t rand_seed = 1;
  int rand_n = 8;
  int rand_horizon = 3;
  double rand_edge_prob = 0.3;
  std::vector<std::int64_t> rand_alphabet = {1};
  std::string rand_out;
  CLI::App* gen_rand = gen->add_subcommand("random", "seeded random temporal graph");
  gen_rand->add_option("--seed", rand_seed, "generator seed")->capture_default_str();
  gen_rand->add_option("--n", rand_n, "node count")->capture_default_str();
  gen_rand->add_option("--horizon", rand_horizon, "step count")->capture_default_str();
  gen_rand->add_option("--edge-prob", rand_edge_prob, "per-step edge probability")
      ->capture_default_str();
  gen_rand->add_option("--alphabet", rand_alphabet, "integer attribute alphabet")
      ->delimiter(',')
      ->capture_default_str();
  gen_rand->add_option("--out", rand_out, "output graph file")->required();

  // wl
  std::string wl_variant = "time-and";
  int wl_layers = 2;
  int wl_iterations = -1;
  std::string wl_input, wl_out;
  CLI::App* wl_cmd = app.add_subcommand("wl", "color a graph under one refinement variant");
  wl_cmd->add_option("--variant", wl_variant, "refinement variant")
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kVariantNames),
                                                     std::end(kVariantNames))))
      ->capture_default_str();
  wl_cmd->add_option("--layers", wl_layers, "rounds per step")->capture_default_str();
  wl_cmd->add_option("--iterations", wl_iterations,
                     "total rounds for static and time-then (default horizon * layers)");
  wl_cmd->add_option("--input", wl_input, "input graph file")->required();
  wl_cmd->add_option("--out", wl_out, "output coloring file")->required();

  // compare
  std::string cmp_variant = "time-and";
  int cmp_layers = 2;
  int cmp_iterations = -1;
  std::vector<std::string> cmp_files;
  CLI::App* cmp_cmd = app.add_subcommand("compare", "joint run on two graphs");
  cmp_cmd->add_option("--variant", cmp_variant, "refinement variant")
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kVariantNames),
                                                     std::end(kVariantNames))))
      ->capture_default_str();
  cmp_cmd->add_option("--layers", cmp_layers, "rounds per step")->capture_default_str();
  cmp_cmd->add_option("--iterations", cmp_iterations,
                      "total rounds for static and time-then (default horizon * layers)");
  cmp_cmd->add_option("files", cmp_files, "two graph files")->expected(2)->required();

  // experiment
  CLI::App* exp_cmd = app.add_subcommand("experiment", "end-to-end separation experiments");
  exp_cmd->require_subcommand(1);
  std::uint64_t exp_seed = 7;
  int exp_layers = 2;
  std::string exp_report, exp_csv;
  CLI::App* exp_dyn = exp_cmd->add_subcommand("dyncsl", "circulant stack separation");
  exp_dyn->add_option("--seed", exp_seed, "dataset seed")->capture_default_str();
  exp_dyn->add_option("--layers", exp_layers, "rounds per step")->capture_default_str();
  exp_dyn->add_option("--report", exp_report, "JSON report file")->required();
  exp_dyn->add_option("--csv", exp_csv, "CSV projection of the per-sample rows");

  // check
  std::string check_suite;
  int check_trials = 100;
  std::uint64_t check_seed = 11;
  CLI::App* check_cmd = app.add_subcommand("check", "run an assertion suite");
  check_cmd
      ->add_option("--suite", check_suite, "suite name")
      ->check(CLI::IsMember({"ordering", "symmetry", "equivariance", "oracle"}))
      ->required();
  check_cmd->add_option("--trials", check_trials, "randomized trials")->capture_default_str();
  check_cmd->add_option("--seed", check_seed, "corpus seed")->capture_default_str();

  // orbits
  std::string orbits_input;
  int orbits_limit = 9;
  CLI::App* orbits_cmd = app.add_subcommand("orbits", "exact automorphism orbits");
  orbits_cmd->add_option("--input", orbits_input, "input graph file")->required();
  orbits_cmd->add_option("--node-limit", orbits_limit, "search size cap")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (gen_csl->parsed()) {
      tglab::save_temporal_graph(tglab::aggregate({tglab::gen::csl(csl_n, csl_skip)}),
                                 csl_out);
    } else if (gen_dyn->parsed()) {
      tglab::gen::write_dataset(tglab::gen::dyncsl_dataset(dyn_seed, dyn_cfg), dyn_out_dir);
    } else if (gen_web->parsed()) {
      tglab::save_temporal_graph(tglab::gen::foodweb(), foodweb_out);
    } else if (gen_rand->parsed()) {
      std::vector<tglab::AttrValue> alphabet(rand_alphabet.begin(), rand_alphabet.end());
      tglab::save_temporal_graph(
          tglab::gen::random_temporal(rand_seed, rand_n, rand_horizon, rand_edge_prob,
                                      alphabet),
          rand_out);
    } else if (wl_cmd->parsed()) {
      const TemporalGraph g = tglab::load_temporal_graph(wl_input);
      const tglab::wl::WlConfig cfg = make_config(wl_variant, wl_layers, wl_iterations);
      tglab::Session session;
      const tglab::Coloring coloring = tglab::wl::run_variant(g, cfg, session);
      tglab::write_text_file(wl_out, tglab::wl::coloring_to_json(coloring, cfg.variant));
    } else if (cmp_cmd->parsed()) {
      const TemporalGraph a = tglab::load_temporal_graph(cmp_files[0]);
      const TemporalGraph b = tglab::load_temporal_graph(cmp_files[1]);
      const tglab::wl::WlConfig cfg = make_config(cmp_variant, cmp_layers, cmp_iterations);
      const bool distinguished = tglab::wl::distinguish(a, b, cfg);
      std::cout << "{\"distinguished\":" << (distinguished ? "true" : "false") << "}\n";
    } else if (exp_dyn->parsed()) {
      const auto start = std::chrono::steady_clock::now();
      tglab::harness::ExperimentConfig cfg;
      cfg.layers = exp_layers;
      const tglab::harness::ExperimentReport report =
          tglab::harness::run_experiment_dyncsl(exp_seed, cfg);
      tglab::write_text_file(exp_report, tglab::harness::report_to_json(report));
      if (!exp_csv.empty()) {
        tglab::write_text_file(exp_csv, tglab::harness::report_to_csv(report));
      }
      const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start);
      std::cerr << "experiment dyncsl: seed=" << exp_seed << " elapsed_ms=" << elapsed.count()
                << "\n";
    } else if (check_cmd->parsed()) {
      const tglab::harness::CheckResult result =
          tglab::harness::run_checks(check_suite, check_trials, check_seed);
      for (const std::string& line : result.lines) std::cout << line << "\n";
      std::cout << "[" << check_suite << "] " << (result.passed ? "PASS" : "FAIL") << "\n";
      if (!result.passed) return 3;
    } else if (orbits_cmd->parsed()) {
      const TemporalGraph g = tglab::load_temporal_graph(orbits_input);
      const tglab::Partition orbits = tglab::oracle::node_orbits(g, {orbits_limit});
      std::cout << "{\"orbits\":[";
      const auto groups = orbits.groups();
      for (std::size_t c = 0; c < groups.size(); ++c) {
        if (c > 0) std::cout << ",";
        std::cout << "[";
        for (std::size_t k = 0; k < groups[c].size(); ++k) {
          if (k > 0) std::cout << ",";
          std::cout << groups[c][k];
        }
        std::cout << "]";
      }
      std::cout << "]}\n";
    }
  } catch (const tglab::InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const tglab::UnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
