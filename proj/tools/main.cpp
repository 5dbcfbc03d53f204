#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "stickylab/report.hpp"

using namespace stickylab;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string scalar_arg(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + scalar_arg(x);
    return s;
  }
  return v.dump();
}

// Turns a JSON config into flags placed after the subcommand words, so flags
// given on the command line (which come later) win.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (path.empty()) return args;

  std::ifstream in(path);
  if (!in) throw cli::UsageError("cannot read config " + path);
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::exception& e) {
    throw cli::UsageError("config " + path + ": " + e.what());
  }
  if (!cfg.is_object()) throw cli::UsageError("config must be a JSON object");

  std::size_t lead = 0;
  while (lead < args.size() && args[lead].rfind("-", 0) != 0) ++lead;
  if (lead == 0 && cfg.contains("command")) {
    std::vector<std::string> words;
    std::string cmd = cfg.at("command").get<std::string>(), w;
    for (char c : cmd + " ")
      if (c == ' ') {
        if (!w.empty()) words.push_back(w);
        w.clear();
      } else {
        w += c;
      }
    args.insert(args.begin(), words.begin(), words.end());
    lead = words.size();
  }

  std::vector<std::string> flags;
  for (const auto& [key, val] : cfg.items()) {
    if (key == "command") continue;
    if (key == "schedule") {
      flags.push_back("--schedule-json");
      flags.push_back(val.dump());
    } else if (key == "params") {
      for (const auto& [pk, pv] : val.items()) {
        if (pv.is_boolean()) {
          if (pv.get<bool>()) flags.push_back("--" + pk);
          continue;
        }
        flags.push_back("--" + pk);
        flags.push_back(scalar_arg(pv));
      }
    } else {
      flags.push_back("--" + key);
      flags.push_back(scalar_arg(val));
    }
  }
  args.insert(args.begin() + static_cast<std::ptrdiff_t>(lead), flags.begin(), flags.end());
  return args;
}

std::vector<std::uint64_t> range_list(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> v;
  for (std::uint64_t n = lo; n <= hi; ++n) v.push_back(n);
  return v;
}

// Effective options of the chosen subcommand chain, for the report header.
json echo_options(const CLI::App* app) {
  json j = json::object();
  for (const CLI::Option* opt : app->get_options()) {
    if (opt->get_name() == "--help" || opt->get_lnames().empty()) continue;
    const std::string name = opt->get_lnames().front();
    if (name == "out" || name == "csv" || name == "config" || name == "schedule-json") continue;
    if (opt->count() > 0) {
      std::string joined;
      for (const auto& r : opt->reduced_results()) joined += (joined.empty() ? "" : ",") + r;
      j[name] = joined;
    }
    else if (!opt->get_default_str().empty()) j[name] = opt->get_default_str();
  }
  for (const CLI::App* sub : app->get_subcommands()) j[sub->get_name()] = echo_options(sub);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stickylab: resolution-bounded experiments on sticky convergence"};
  app.option_defaults()->always_capture_default()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.fallthrough();
  app.require_subcommand(1);

  std::string out, csv, schedule_json;
  std::uint64_t seed = 0, n_max = 0, m_max = 0;
  double horizon = 0.0;
  app.add_option("--out", out, "report JSON path (stdout when omitted)");
  app.add_option("--csv", csv, "CSV sidecar path");
  app.add_option("--seed", seed, "seed for randomized invariant suites");
  app.add_option("--n-max", n_max, "override schedule n_max");
  app.add_option("--m-max", m_max, "override schedule m_max");
  app.add_option("--horizon", horizon, "override schedule horizon");
  app.add_option("--schedule-json", schedule_json, "schedule overrides as inline JSON")->group("");
  app.add_option("--config", "JSON config mirroring the command line");  // consumed before parsing

  std::string family, mode = "sticky";
  auto* analyze = app.add_subcommand("analyze", "run a convergence detector on a family");
  analyze->add_option("--family", family, "built-in name or spec .json")->required();
  analyze->add_option("--mode", mode, "pointwise | sticky | locally-uniform | cauchy");

  app.add_subcommand("catalog", "list built-in families with labels");

  std::uint64_t k = 4, n = 8;
  double alpha = 1.0, t0 = 0.5;
  auto* lemma = app.add_subcommand("lemma", "exact sup norm of a spike convolved with the Haar kernel");
  lemma->add_option("--k", k);
  lemma->add_option("--n", n);
  lemma->add_option("--alpha", alpha);
  lemma->add_option("--t0", t0);

  std::size_t i_max = 6;
  std::uint64_t bs_n_max = 1024;
  std::vector<std::uint64_t> n_list;
  std::string alpha_rule;
  auto* bs = app.add_subcommand("banach-steinhaus", "gliding-hump spike sum against eta_n");
  bs->add_option("--i-max", i_max);
  bs->add_option("--up-to", bs_n_max, "n runs over 1..up-to unless --n-list is given");
  bs->add_option("--n-list", n_list)->delimiter(',');
  bs->add_option("--alpha", alpha_rule, "n/log(n+2) | sqrt(n) | 1 | n^p");

  std::string xi = "builtin";
  std::vector<double> s_list{0.05, 0.02, 0.01};
  bool no_detectors = false;
  auto* poisson = app.add_subcommand("poisson", "Poisson-summation sums S(s) and the psi_N family");
  poisson->add_option("--xi", xi, "builtin | odd");
  poisson->add_option("--s", s_list)->delimiter(',');
  poisson->add_flag("--no-detectors", no_detectors);

  std::vector<std::uint64_t> d_list{1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048, 4096};
  auto* dirichlet = app.add_subcommand("dirichlet", "L1 norms of Dirichlet kernels");
  dirichlet->add_option("--n", d_list)->delimiter(',');

  cli::Target target;
  std::uint64_t member = 0;
  double a = -0.5, b = 0.5, t = 0.0;
  std::vector<double> window;
  std::string tau = "reciprocal", kind = "continuous";
  auto* functional = app.add_subcommand("functional", "functionals of a member or of the limit");
  functional->require_subcommand(1);
  auto add_target = [&](CLI::App* sub) {
    sub->add_option("--family", target.family, "built-in name or spec .json")->required();
    sub->add_option("--n", member, "member index (default: the limit)");
  };
  auto* up = functional->add_subcommand("upcrossings", "up-crossing count of [a, b]");
  add_target(up);
  up->add_option("--a", a);
  up->add_option("--b", b);
  up->add_option("--window", window, "lo,hi (default [0, 1])")->delimiter(',');
  auto* ls = functional->add_subcommand("limsup", "limsup and liminf along a time sequence");
  add_target(ls);
  ls->add_option("--t", t);
  ls->add_option("--tau", tau, "reciprocal | geometric | reciprocal-left");
  auto* prop = functional->add_subcommand("property", "pointwise regularity check");
  add_target(prop);
  prop->add_option("--kind", kind, "continuous | right-continuous | left-limit | cadlag | locally-bounded | lsc | usc");
  prop->add_option("--t", t);

  std::string double_name;
  std::uint64_t box = 256;
  double eps = 0.05;
  auto* cluster = app.add_subcommand("cluster", "double-sequence cluster candidates");
  cluster->add_option("--family", family, "family for sigma_ij = f_i(t_j)");
  cluster->add_option("--double", double_name, "built-in double sequence");
  cluster->add_option("--tau", tau);
  cluster->add_option("--t", t);
  cluster->add_option("--box", box);
  cluster->add_option("--eps", eps);

  auto* compact = app.add_subcommand("compactness", "compactness diagnostic of a family");
  compact->add_option("--family", family, "built-in name or spec .json")->required();

  std::string seq_in;
  std::uint64_t unit = 0;
  auto* lsn = app.add_subcommand("ls-norm", "norm of a tailed sequence in l_s");
  lsn->add_option("--in", seq_in, "sequence JSON");
  lsn->add_option("--unit", unit, "use e_n instead of --in");

  app.add_subcommand("suite", "run the acceptance battery");

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    args = expand_config(std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "valid subcommands: analyze, catalog, lemma, banach-steinhaus, poisson, dirichlet, functional, "
                 "cluster, compactness, ls-norm, suite\n";
    return 3;
  } catch (const cli::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }

  cli::Result result;
  ResolutionSchedule sched;
  std::string command;
  try {
    json sj = json::object();
    if (!schedule_json.empty()) sj = json::parse(schedule_json);
    if (n_max) sj["n_max"] = n_max;
    if (m_max) sj["m_max"] = m_max;
    if (horizon > 0.0) sj["horizon"] = horizon;
    sched = ResolutionSchedule::from_json(sj);

    if (member > 0) target.n = member;
    CLI::App* sub = app.get_subcommands().front();
    command = sub->get_name();
    if (sub == analyze) result = cli::analyze(family, mode, sched);
    else if (command == "catalog") result = cli::catalog();
    else if (sub == lemma) result = cli::lemma(k, n, alpha, t0);
    else if (sub == bs) result = cli::banach_steinhaus(i_max, n_list.empty() ? range_list(1, bs_n_max) : n_list, alpha_rule);
    else if (sub == poisson) result = cli::poisson(xi, s_list, !no_detectors, sched);
    else if (sub == dirichlet) result = cli::dirichlet(d_list);
    else if (sub == functional) {
      CLI::App* fs = functional->get_subcommands().front();
      command += " " + fs->get_name();
      if (fs == up) result = cli::upcrossings(target, a, b, window, sched);
      else if (fs == ls) result = cli::limsup(target, t, tau, sched);
      else result = cli::property(target, kind, t, sched);
    } else if (sub == cluster) result = cli::cluster(family, double_name, tau, t, box, eps);
    else if (sub == compact) result = cli::compactness(family, sched);
    else if (sub == lsn) result = cli::ls_norm(seq_in, lsn->count("--unit") ? std::optional<std::uint64_t>(unit) : std::nullopt);
    else result = cli::suite(battery::Options{seed, sched});
  } catch (const cli::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }

  const int status = cli::exit_code(result.outcome);
  json rep{{"header",
            {{"tool", "stickylab"},
             {"version", kVersion},
             {"command", command},
             {"config", echo_options(app.get_subcommands().front())},
             {"seed", seed},
             {"schedule", sched.to_json()},
             {"flags", {{"ls_index_origin", 0}, {"circle", "R/Z"}, {"cauchy_tail", "scale_adaptive"}}}}},
           {"body", result.body},
           {"outcome", to_string(result.outcome)},
           {"exit_status", status},
           {"tables", {{"csv", csv.empty() ? json(nullptr) : json(csv)}}}};
  try {
    if (!csv.empty() && result.table) report::write_csv(csv, *result.table);
    if (out.empty()) std::cout << report::dump(rep);
    else report::write_json(out, rep);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return status;
}
