// Prints one line per acceptance criterion; exits non-zero if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "battery.hpp"
#include "stickylab/report.hpp"

using namespace stickylab;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_suite(const std::string& out) {
  const std::string cmd = std::string(STICKYLAB_CLI) + " suite --seed 0 --out " + out + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void print(int id, const std::string& name, bool pass, double seconds, double budget, const std::string& note) {
  std::printf("criterion %d: %s  %-28s %7.2fs", id, pass ? "PASS" : "FAIL", name.c_str(), seconds);
  if (budget > 0.0) std::printf(" (budget %.0fs)", budget);
  if (!note.empty()) std::printf("  %s", note.c_str());
  std::printf("\n");
  std::fflush(stdout);
}

// Short human summary of the fields that decide each criterion.
std::string note_for(const battery::Criterion& c) {
  const json& d = c.detail;
  if (d.contains("error")) return "error: " + d.at("error").get<std::string>();
  switch (c.id) {
    case 1: {
      char buf[48];
      std::snprintf(buf, sizeof buf, "max rel err %.2e", d.at("max_relative_error").get<double>());
      return buf;
    }
    case 2: {
      std::string s = "blowup " + std::string(d.at("blowup_increasing").get<bool>() ? "ok" : "no") +
                      ", zero-at-0 violations " + d.at("zero_at_origin_violations").dump() + ", decay ratios";
      for (const auto& r : d.at("decay_ratio_at_1024")) {
        char buf[32];
        std::snprintf(buf, sizeof buf, " %.3f", r.get<double>());
        s += buf;
      }
      return s + " (need < 0.100)";
    }
    case 3: return "sticky " + d.at("sticky").get<std::string>() + ", continuity " + d.at("continuity").get<std::string>();
    case 4: return "labelled " + d.at("labelled").dump() + ", chain violations " + d.at("chain_violations").dump();
    case 5: return "families " + std::to_string(d.at("families").size());
    case 6: {
      char buf[96];
      std::snprintf(buf, sizeof buf, "sin rho min %.4f, bump-train rho max %.1e",
                    d.at("sin_rho_min").get<double>(), d.at("bump_train_rho_max").get<double>());
      return buf;
    }
    case 7: return "axiom failures " + d.at("axiom_failures").dump();
    default: return "";
  }
}

}  // namespace

int main() {
  battery::Options opt;
  bool all = true;
  for (auto fn : {battery::lemma_exactness, battery::gliding_hump, battery::poisson_zero, battery::detector_soundness,
                  battery::preservation, battery::compactness, battery::ls_space}) {
    const auto c = fn(opt);
    print(c.id, c.name, c.pass, c.seconds, c.budget, note_for(c));
    if (!c.pass) std::printf("    detail: %s", report::dump(c.detail, 0).c_str());
    all = all && c.pass;
  }

  const auto start = std::chrono::steady_clock::now();
  const int first = run_suite("acceptance_suite.json");
  const std::string a = slurp("acceptance_suite.json");
  const int second = run_suite("acceptance_suite.json");
  const std::string b = slurp("acceptance_suite.json");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ran = first >= 0 && first <= 2 && second == first && !a.empty();
  const bool same = ran && a == b;
  print(8, "determinism", same, secs, 0.0,
        ran ? (same ? "two suite runs byte-identical (" + std::to_string(a.size()) + " bytes)" : "reports differ")
            : "suite did not run");
  all = all && same;
  return all ? 0 : 1;
}
