#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "stickylab/catalog.hpp"

using namespace stickylab;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(STICKYLAB_CLI) + " " + args + " > /dev/null 2> cli_stderr.txt";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int expected_code(const std::string& outcome) {
  if (outcome == "Holds") return 0;
  if (outcome == "Fails") return 1;
  return 2;
}

}  // namespace

TEST_CASE("exit status follows the reported outcome on every catalog family") {
  for (const auto& e : catalog::catalog_list()) {
    const std::string mode = e.label.pointwise_limit ? "sticky" : "cauchy";
    const int code = run("analyze --family " + e.name + " --mode " + mode + " --out cli_report.json");
    const json rep = json::parse(slurp("cli_report.json"));
    CHECK_MESSAGE(code == expected_code(rep.at("outcome").get<std::string>()), e.name);
    CHECK(rep.at("exit_status").get<int>() == code);
    if (code == 1) CHECK_FALSE(rep.at("body").at("verdict").at("witness").empty());
  }
}

TEST_CASE("documented examples") {
  CHECK(run("analyze --family scaled-bump-exp --mode sticky --out cli_a.json") == 0);
  CHECK(run("lemma --k 4 --n 8 --alpha 1 --out cli_l.json") == 0);
  const json l = json::parse(slurp("cli_l.json"));
  CHECK(l.at("body").at("measured_sup").get<double>() == doctest::Approx(1.0));
  CHECK(l.at("body").at("predicted_sup").get<double>() == 1.0);
  CHECK(run("analyze --family indicator-front --mode sticky --out cli_f.json") == 1);
  const json f = json::parse(slurp("cli_f.json"));
  CHECK(f.at("body").at("verdict").at("witness").at("t").get<double>() == 0.0);
}

TEST_CASE("usage errors exit with 3 and list valid options") {
  CHECK(run("analyze --family no-such-family") == 3);
  CHECK(slurp("cli_stderr.txt").find("scaled-bump-exp") != std::string::npos);
  CHECK(run("no-such-command") == 3);
  CHECK(slurp("cli_stderr.txt").find("compactness") != std::string::npos);
  CHECK(run("analyze --family sin-no-limit --mode sticky") == 3);
  CHECK(run("analyze --family linear-shrink --mode sideways") == 3);
  CHECK(run("lemma --k 8 --n 4") == 3);
  CHECK(run("--config does-not-exist.json") == 3);
  CHECK(run("analyze --family linear-shrink --n-max 1") == 3);
}

TEST_CASE("config files mirror the command line") {
  {
    std::ofstream cfg("cli_cfg.json");
    cfg << R"({"command": "lemma", "params": {"k": 4, "n": 4, "alpha": 2, "t0": 0.375}, "out": "cli_cfg_out.json",
               "csv": "cli_cfg_out.csv"})";
  }
  CHECK(run("--config cli_cfg.json") == 0);
  const json r = json::parse(slurp("cli_cfg_out.json"));
  CHECK(r.at("body").at("measured_sup").get<double>() == doctest::Approx(4.0));
  CHECK(r.at("header").at("config").at("k") == "4");
  const std::string csv = slurp("cli_cfg_out.csv");
  CHECK(csv.rfind("k,n,alpha,t0,", 0) == 0);

  // Flags on the command line override the file.
  CHECK(run("--config cli_cfg.json --n 8") == 0);
  CHECK(json::parse(slurp("cli_cfg_out.json")).at("body").at("measured_sup").get<double>() == doctest::Approx(2.0));
}

TEST_CASE("reports are byte-identical across runs") {
  CHECK(run("banach-steinhaus --n-list 4,8,16,32 --out cli_d1.json --csv cli_d1.csv") == 0);
  const std::string a = slurp("cli_d1.json"), ac = slurp("cli_d1.csv");
  CHECK(run("banach-steinhaus --n-list 4,8,16,32 --out cli_d1.json --csv cli_d1.csv") == 0);
  CHECK(slurp("cli_d1.json") == a);
  CHECK(slurp("cli_d1.csv") == ac);
}
