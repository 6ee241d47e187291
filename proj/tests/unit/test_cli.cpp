#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(INFOCAST_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("infocast_cli_" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("single variant run writes the metric files") {
  auto out = scratch("basic");
  CHECK(run_cli("--scenario single_hop --algorithm greedy --decoder simple --runs 3 --seed 7 --nodes 10 "
                "--symbols 20 --out " + out.string()) == 0);
  for (auto metric : {"recovery", "degree", "delay", "potential"}) {
    CHECK(fs::exists(out / (std::string("greedy_simple_") + metric + ".csv")));
  }
  CHECK(fs::exists(out / "summary.csv"));

  auto again = scratch("basic_again");
  CHECK(run_cli("--scenario single_hop --algorithm greedy --decoder simple --runs 3 --seed 7 --nodes 10 "
                "--symbols 20 --workers 2 --out " + again.string()) == 0);
  CHECK(slurp(out / "greedy_simple_recovery.csv") == slurp(again / "greedy_simple_recovery.csv"));
  CHECK(slurp(out / "summary.csv") == slurp(again / "summary.csv"));
  fs::remove_all(out);
  fs::remove_all(again);
}

TEST_CASE("usage errors") {
  CHECK(run_cli("--algorithm fountain") == 2);
  CHECK(run_cli("--scenario moon") == 2);
  CHECK(run_cli("--figure nope") == 2);
  CHECK(run_cli("--runs 0") == 2);
  CHECK(run_cli("--scenario grid --nodes 50") == 2);
  CHECK(run_cli("--bogus-flag") == 2);
  CHECK(run_cli("--help") == 0);
}

TEST_CASE("unwritable output directory") {
  auto dir = scratch("io");
  fs::create_directories(dir);
  std::ofstream(dir / "file") << "x";
  CHECK(run_cli("--runs 1 --nodes 5 --symbols 5 --out " + (dir / "file" / "sub").string()) == 3);
  fs::remove_all(dir);
}

TEST_CASE("incomplete runs fail the campaign") {
  auto out = scratch("incomplete");
  CHECK(run_cli("--runs 2 --nodes 5 --symbols 5 --erasure 1 --max-rounds 20 --out " + out.string()) == 4);
  CHECK(run_cli("--runs 2 --nodes 5 --symbols 5 --erasure 1 --max-rounds 20 --max-incomplete 1 --out " +
                out.string()) == 0);
  fs::remove_all(out);
}

TEST_CASE("config file with flag override") {
  auto dir = scratch("config");
  fs::create_directories(dir);
  {
    std::ofstream cfg(dir / "run.toml");
    cfg << "scenario = \"grid\"\nalgorithm = \"equalizing\"\nruns = 2\ngrid-rows = 4\ngrid-cols = 4\nnodes = 16\n";
  }
  CHECK(run_cli("--config " + (dir / "run.toml").string() + " --algorithm opportunistic --out " +
                (dir / "out").string()) == 0);
  CHECK(fs::exists(dir / "out" / "opportunistic_simple_recovery.csv"));
  CHECK_FALSE(fs::exists(dir / "out" / "equalizing_simple_recovery.csv"));
  auto summary = slurp(dir / "out" / "summary.csv");
  CHECK(summary.find("opportunistic_simple,2,") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("figure preset with a variant override") {
  auto out = scratch("figure");
  CHECK(run_cli("--figure 1hop --algorithm anc --runs 2 --nodes 8 --symbols 12 --out " + out.string()) == 0);
  CHECK(fs::exists(out / "anc_simple_recovery.csv"));
  CHECK_FALSE(fs::exists(out / "greedy_simple_recovery.csv"));
  fs::remove_all(out);
}
