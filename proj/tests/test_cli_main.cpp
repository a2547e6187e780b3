#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

std::string cli_path() {
  const char* path = std::getenv("OVERSMOOTH_CLI");
  REQUIRE_MESSAGE(path != nullptr, "OVERSMOOTH_CLI must point at the binary");
  return path;
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  static int counter = 0;
  const std::string out_path =
      "cli_test_out_" + std::to_string(counter++) + ".tmp";
  const std::string command =
      cli_path() + " " + args + " > " + out_path + " 2>/dev/null";
  const int status = std::system(command.c_str());

  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  std::remove(out_path.c_str());
  return result;
}

}  // namespace

TEST_CASE("analyze emits the worked Path(3) report") {
  const RunResult r = run("analyze --generate path:3 --epsilon 0.1 --s 1.4 --d0 1");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["spectral"]["lambda"].get<double>() == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(doc["spectral"]["fiedler"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(doc["bounds"]["thm3_s_bound"].get<double>() == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(doc["bounds"]["l_hat"] == 7);
}

TEST_CASE("analyze karate summary") {
  const RunResult r = run("analyze --generate karate");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["graph"]["n"] == 34);
  CHECK(doc["graph"]["d_max"] == 17);
  CHECK(doc["graph"]["diameter"] == 5);
}

TEST_CASE("analyze exit codes") {
  CHECK(run("analyze --edges missing.txt").exit_code == 1);
  CHECK(run("analyze").exit_code == 1);  // no graph source
  // Paper-reading Cavers fails on complete graphs: audited link -> exit 2.
  CHECK(run("analyze --generate complete:3").exit_code == 2);
  CHECK(run("analyze --generate complete:3 --dmax-reading augmented").exit_code == 0);
  CHECK(run("nonsense-subcommand").exit_code == 1);
}

TEST_CASE("simulate depth 0 prints only layer 0") {
  const RunResult r = run("simulate --generate path:3 --arch gcn --depth 0 --seed 1");
  CHECK(r.exit_code == 0);
  int lines = 0;
  for (char c : r.output) lines += c == '\n';
  CHECK(lines == 2);  // header + layer 0
  CHECK(r.output.rfind("layer,d_m,mad,row_diff,col_diff\n", 0) == 0);
}

TEST_CASE("simulate decay matches the Path(3) oracle with orthogonal init") {
  const RunResult r = run(
      "simulate --generate path:3 --arch gcn --depth 6 --channels 1 "
      "--activation identity --s-target 1 --init orthogonal --seed 3");
  CHECK(r.exit_code == 0);
  // d_m halves per layer on Path(3); check the ratio between first layers.
  std::istringstream lines(r.output);
  std::string line;
  std::getline(lines, line);  // header
  double d_prev = -1.0;
  int checked = 0;
  while (std::getline(lines, line)) {
    const auto first_comma = line.find(',');
    const auto second_comma = line.find(',', first_comma + 1);
    const double d_m = std::stod(line.substr(first_comma + 1, second_comma - first_comma - 1));
    if (d_prev > 0) {
      CHECK(d_m == doctest::Approx(0.5 * d_prev).epsilon(1e-6));
      ++checked;
    }
    d_prev = d_m;
  }
  CHECK(checked == 6);
}

TEST_CASE("byte determinism of repeated invocations") {
  const std::string commands[] = {
      "simulate --generate karate --arch gcnii --alpha 0.1 --beta 0.3 --depth 12 --seed 9",
      "compare --generate karate --config gcn --config \"dropedge:rate=0.5\" --depth 8 --seed 4",
      "verify reductions --seed 2",
  };
  for (const std::string& command : commands) {
    const RunResult a = run(command);
    const RunResult b = run(command);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(!a.output.empty());
  }
}

TEST_CASE("compare emits identical blocks for identical configs") {
  const RunResult r = run(
      "compare --generate path:3 --config gcn --config gcn --depth 5 --seed 6");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string line;
  std::getline(lines, line);  // header
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 12);
  for (int i = 0; i < 6; ++i) CHECK(rows[i] == rows[i + 6]);
}

TEST_CASE("compare dropedge rate 0 equals gcn") {
  const RunResult r = run(
      "compare --generate karate --config gcn --config \"dropedge:rate=0\" "
      "--depth 6 --seed 11");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string line;
  std::getline(lines, line);
  std::vector<std::string> gcn_rows, drop_rows;
  while (std::getline(lines, line)) {
    const auto comma = line.find(',');
    const std::string arch = line.substr(0, comma);
    if (arch == "gcn") gcn_rows.push_back(line.substr(comma));
    else drop_rows.push_back(line.substr(comma));
  }
  REQUIRE(gcn_rows.size() == 7);
  REQUIRE(gcn_rows.size() == drop_rows.size());
  for (std::size_t i = 0; i < gcn_rows.size(); ++i) CHECK(gcn_rows[i] == drop_rows[i]);
}

TEST_CASE("verify reductions passes and unknown suites fail cleanly") {
  const RunResult ok = run("verify reductions --seed 2");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("reductions: 3/3 checks pass") != std::string::npos);
  CHECK(run("verify nonsense --seed 2").exit_code == 1);
}

TEST_CASE("OVERSMOOTH_SEED is the fallback seed and the flag wins") {
  const RunResult flagged = run("simulate --generate path:3 --arch gcn --depth 3 --seed 21");
  const std::string env_prefix = "OVERSMOOTH_SEED=21 ";
  const std::string command = env_prefix + cli_path() +
                              " simulate --generate path:3 --arch gcn --depth 3 "
                              "> cli_env_out.tmp 2>/dev/null";
  REQUIRE(std::system(command.c_str()) == 0);
  std::ifstream in("cli_env_out.tmp", std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::remove("cli_env_out.tmp");
  CHECK(buffer.str() == flagged.output);

  const std::string flag_wins = env_prefix + cli_path() +
                                " simulate --generate path:3 --arch gcn --depth 3 "
                                "--seed 22 > cli_env_out2.tmp 2>/dev/null";
  REQUIRE(std::system(flag_wins.c_str()) == 0);
  std::ifstream in2("cli_env_out2.tmp", std::ios::binary);
  std::stringstream buffer2;
  buffer2 << in2.rdbuf();
  std::remove("cli_env_out2.tmp");
  const RunResult flagged22 = run("simulate --generate path:3 --arch gcn --depth 3 --seed 22");
  CHECK(buffer2.str() == flagged22.output);
  CHECK(buffer2.str() != flagged.output);
}
