#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "tglab/graph_io.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

const fs::path& scratch_dir() {
  static const fs::path dir = [] {
    const fs::path d = fs::path(testing::TempDir()) / "tglab_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run_cli(const std::string& args) {
  const fs::path out_file = scratch_dir() / "stdout.txt";
  const std::string command =
      std::string(TGLAB_CLI_PATH) + " " + args + " > " + out_file.string() + " 2>/dev/null";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = tglab::read_text_file(out_file);
  return result;
}

std::string path_in_scratch(const std::string& name) {
  return (scratch_dir() / name).string();
}

TEST(Cli, UsageErrorsExitWithOne) {
  EXPECT_EQ(run_cli("").exit_code, 1);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 1);
  EXPECT_EQ(run_cli("gen csl").exit_code, 1);
  EXPECT_EQ(run_cli("wl --variant nope --input x --out y").exit_code, 1);
  EXPECT_EQ(run_cli("check --suite nope").exit_code, 1);
}

TEST(Cli, HelpExitsCleanly) {
  const RunResult r = run_cli("--help");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("gen"), std::string::npos);
}

TEST(Cli, InvalidInputsExitWithTwo) {
  EXPECT_EQ(run_cli("gen csl --n 2 --skip 1 --out " + path_in_scratch("bad.json")).exit_code,
            2);
  EXPECT_EQ(run_cli("wl --input " + path_in_scratch("missing.json") + " --out " +
                    path_in_scratch("c.json"))
                .exit_code,
            2);
  tglab::write_text_file(path_in_scratch("garbage.json"), "not json\n");
  EXPECT_EQ(run_cli("orbits --input " + path_in_scratch("garbage.json")).exit_code, 2);
}

TEST(Cli, FoodwebOrbitsPairTheChains) {
  const std::string file = path_in_scratch("foodweb.json");
  ASSERT_EQ(run_cli("gen foodweb --out " + file).exit_code, 0);
  const RunResult r = run_cli("orbits --input " + file);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "{\"orbits\":[[0,3],[1,4],[2,5]]}\n");
}

TEST(Cli, OrbitsHonorNodeLimit) {
  const std::string file = path_in_scratch("c19.json");
  ASSERT_EQ(run_cli("gen csl --n 19 --skip 2 --out " + file).exit_code, 0);
  EXPECT_EQ(run_cli("orbits --input " + file).exit_code, 2);
  EXPECT_EQ(run_cli("orbits --node-limit 19 --input " + file).exit_code, 0);
}

TEST(Cli, CompareReportsJointVerdict) {
  const std::string a = path_in_scratch("c19s2.json");
  const std::string b = path_in_scratch("c19s3.json");
  ASSERT_EQ(run_cli("gen csl --n 19 --skip 2 --out " + a).exit_code, 0);
  ASSERT_EQ(run_cli("gen csl --n 19 --skip 3 --out " + b).exit_code, 0);
  const RunResult same = run_cli("compare --variant static " + a + " " + a);
  EXPECT_EQ(same.exit_code, 0);
  EXPECT_EQ(same.out, "{\"distinguished\":false}\n");
  const RunResult cross = run_cli("compare --variant static " + a + " " + b);
  EXPECT_EQ(cross.out, "{\"distinguished\":false}\n");
}

TEST(Cli, WlWritesColoringFile) {
  const std::string graph = path_in_scratch("foodweb_wl.json");
  const std::string coloring = path_in_scratch("foodweb_colors.json");
  ASSERT_EQ(run_cli("gen foodweb --out " + graph).exit_code, 0);
  ASSERT_EQ(
      run_cli("wl --variant time-then --input " + graph + " --out " + coloring).exit_code,
      0);
  const std::string text = tglab::read_text_file(coloring);
  EXPECT_NE(text.find("\"variant\":\"time-then\""), std::string::npos);
  EXPECT_NE(text.find("\"colors\""), std::string::npos);
}

TEST(Cli, ChecksReportSuiteVerdict) {
  const RunResult r = run_cli("check --suite symmetry --trials 1");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("[symmetry] PASS"), std::string::npos);
}

TEST(Cli, GeneratedFilesAreByteStable) {
  const std::string a = path_in_scratch("stable_a.json");
  const std::string b = path_in_scratch("stable_b.json");
  ASSERT_EQ(run_cli("gen random --seed 5 --n 7 --horizon 3 --edge-prob 0.4 "
                    "--alphabet 1,2 --out " +
                    a)
                .exit_code,
            0);
  ASSERT_EQ(run_cli("gen random --seed 5 --n 7 --horizon 3 --edge-prob 0.4 "
                    "--alphabet 1,2 --out " +
                    b)
                .exit_code,
            0);
  EXPECT_EQ(tglab::read_text_file(a), tglab::read_text_file(b));
}

TEST(Cli, ExperimentWritesStableReports) {
  const std::string report_a = path_in_scratch("report_a.json");
  const std::string report_b = path_in_scratch("report_b.json");
  const std::string csv_a = path_in_scratch("report_a.csv");
  const std::string csv_b = path_in_scratch("report_b.csv");
  ASSERT_EQ(
      run_cli("experiment dyncsl --seed 7 --report " + report_a + " --csv " + csv_a)
          .exit_code,
      0);
  ASSERT_EQ(
      run_cli("experiment dyncsl --seed 7 --report " + report_b + " --csv " + csv_b)
          .exit_code,
      0);
  EXPECT_EQ(tglab::read_text_file(report_a), tglab::read_text_file(report_b));
  EXPECT_EQ(tglab::read_text_file(csv_a), tglab::read_text_file(csv_b));
  EXPECT_NE(tglab::read_text_file(report_a).find("\"accuracy\":1.0"), std::string::npos);
}

TEST(Cli, DatasetDirectoriesAreByteStable) {
  const fs::path dir_a = scratch_dir() / "ds_a";
  const fs::path dir_b = scratch_dir() / "ds_b";
  const std::string base =
      "gen dynamic-csl --seed 3 --count 20 --horizon 5 --candidates 2,3,4,5 --folds 5";
  ASSERT_EQ(run_cli(base + " --out-dir " + dir_a.string()).exit_code, 0);
  ASSERT_EQ(run_cli(base + " --out-dir " + dir_b.string()).exit_code, 0);
  EXPECT_EQ(tglab::read_text_file(dir_a / "manifest.json"),
            tglab::read_text_file(dir_b / "manifest.json"));
  for (int i = 0; i < 20; ++i) {
    const std::string name = "sample_" + std::to_string(i) + ".json";
    EXPECT_EQ(tglab::read_text_file(dir_a / name), tglab::read_text_file(dir_b / name));
  }
}

}  // namespace
