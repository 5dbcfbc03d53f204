#include "commands.hpp"

#include <cmath>
#include <fstream>

#include "stickylab/catalog.hpp"
#include "stickylab/convergence.hpp"
#include "stickylab/doubleseq.hpp"
#include "stickylab/functionals.hpp"
#include "stickylab/humps.hpp"
#include "stickylab/seqspace.hpp"

namespace stickylab::cli {

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::Holds: return 0;
    case Outcome::Fails: return 1;
    case Outcome::Inconclusive: return 2;
  }
  return 2;
}

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string builtin_names() {
  std::string s;
  for (const auto& e : catalog::catalog_list()) s += (s.empty() ? "" : ", ") + e.name;
  return s;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

report::Table verdict_table(const Verdict& v) {
  report::Table t{{"t", "eps", "status", "N"}, {}};
  if (!v.certificate.contains("points")) return t;
  for (const auto& pt : v.certificate.at("points")) {
    if (!pt.contains("rungs")) continue;
    for (const auto& r : pt.at("rungs"))
      t.rows.push_back({pt.at("t"), r.at("eps"), r.value("status", ""), r.contains("N") ? r.at("N") : json("")});
  }
  return t;
}

Result from_verdict(const Verdict& v, json body) {
  body["verdict"] = v.to_json();
  return {v.outcome, std::move(body), verdict_table(v)};
}

FunctionOracle target_oracle(const Target& target, const SequenceFamily& fam) {
  if (target.n) {
    if (*target.n == 0) throw UsageError("--n must be at least 1");
    return fam(*target.n);
  }
  if (!fam.label.pointwise_limit) throw UsageError("family " + fam.name + " has no known limit; pass --n");
  return *fam.label.pointwise_limit;
}

functionals::TimeSequence time_sequence(const std::string& kind, double t) {
  if (kind == "reciprocal") return functionals::TimeSequence::reciprocal(t, 0.5);
  if (kind == "geometric") return functionals::TimeSequence::geometric(t, 0.5);
  if (kind == "reciprocal-left") return functionals::TimeSequence::reciprocal(t, -0.5);
  throw UsageError("unknown time sequence '" + kind + "' (valid: reciprocal, geometric, reciprocal-left)");
}

}  // namespace

SequenceFamily resolve_family(const std::string& ref) {
  if (ends_with(ref, ".json")) {
    try {
      return catalog::make_family(catalog::FamilySpec::from_json(read_json_file(ref)));
    } catch (const Error& e) {
      throw UsageError(ref + ": " + e.what());
    }
  }
  if (!catalog::is_builtin(ref)) throw UsageError("unknown family '" + ref + "' (valid: " + builtin_names() + ")");
  return catalog::builtin(ref);
}

Result analyze(const std::string& family, const std::string& mode, const ResolutionSchedule& sched) {
  const auto fam = resolve_family(family);
  json body{{"family", fam.name},
            {"mode", mode},
            {"label",
             {{"sticky", to_string(fam.label.sticky)},
              {"locally_uniform", to_string(fam.label.locally_uniform)},
              {"limit_continuous", to_string(fam.label.limit_continuous)},
              {"has_limit", fam.label.pointwise_limit.has_value()}}}};
  if (mode == "cauchy") return from_verdict(convergence::sticky_cauchy(fam, sched), body);
  if (mode != "pointwise" && mode != "sticky" && mode != "locally-uniform")
    throw UsageError("unknown mode '" + mode + "' (valid: pointwise, sticky, locally-uniform, cauchy)");
  if (!fam.label.pointwise_limit)
    throw UsageError("family " + fam.name + " has no known limit; use --mode cauchy");
  const auto& limit = *fam.label.pointwise_limit;
  if (mode == "pointwise") return from_verdict(convergence::detect_pointwise(fam, limit, sched), body);
  if (mode == "sticky") return from_verdict(convergence::detect_sticky(fam, limit, sched), body);
  return from_verdict(convergence::detect_locally_uniform(fam, limit, sched), body);
}

Result catalog() {
  report::Table t{{"name", "kind", "sticky", "locally_uniform", "limit_continuous", "has_limit"}, {}};
  json entries = json::array();
  for (const auto& e : catalog::catalog_list()) {
    const auto& l = e.label;
    entries.push_back(json{{"name", e.name},
                           {"spec", e.spec.to_json()},
                           {"sticky", to_string(l.sticky)},
                           {"locally_uniform", to_string(l.locally_uniform)},
                           {"limit_continuous", to_string(l.limit_continuous)},
                           {"has_limit", l.pointwise_limit.has_value()},
                           {"provenance", l.provenance}});
    t.rows.push_back({e.name, to_string(e.spec.kind), to_string(l.sticky), to_string(l.locally_uniform),
                      to_string(l.limit_continuous), l.pointwise_limit.has_value() ? "yes" : "no"});
  }
  return {Outcome::Holds, json{{"families", entries}}, t};
}

Result lemma(std::uint64_t k, std::uint64_t n, double alpha, double t0) {
  humps::LemmaReport r;
  try {
    r = humps::lemma_check(k, n, alpha, t0);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const bool ok = r.relative_error <= 1e-9 && r.hull_within;
  report::Table t{{"k", "n", "alpha", "t0", "measured_sup", "predicted_sup", "argmax", "relative_error"},
                  {{r.k, r.n, r.alpha, r.t0, r.measured_sup, r.predicted_sup, r.argmax, r.relative_error}}};
  return {ok ? Outcome::Holds : Outcome::Fails, r.to_json(), t};
}

Result banach_steinhaus(std::size_t i_max, const std::vector<std::uint64_t>& ns, const std::string& alpha) {
  auto params = humps::SpikeSumParams::defaults(i_max);
  if (!alpha.empty()) {
    params.alpha_rule = alpha;
    params.alpha = catalog::alpha_schedule(alpha);
  }
  const auto r = humps::banach_steinhaus_experiment(params, ns);
  report::Table t{{"n", "sup_norm", "value_at_zero"}, {}};
  for (std::size_t p = 0; p < r.probes.size(); ++p) t.columns.push_back("probe_" + std::to_string(p + 1));
  for (std::size_t j = 0; j < r.n_list.size(); ++j) {
    std::vector<json> row{r.n_list[j], r.sup_norm[j], r.value_at_zero[j]};
    for (const auto& pv : r.probe_values) row.push_back(pv[j]);
    t.rows.push_back(std::move(row));
  }
  return {Outcome::Holds, r.to_json(), t};
}

Result poisson(const std::string& xi, const std::vector<double>& s, bool detectors, const ResolutionSchedule& sched) {
  humps::PoissonInput in;
  if (xi == "builtin") in = humps::PoissonInput::builtin();
  else if (xi == "odd") in = humps::PoissonInput::odd();
  else throw UsageError("unknown xi '" + xi + "' (valid: builtin, odd)");
  const auto r = humps::poisson_limit(in, s, sched, detectors);
  report::Table t{{"s", "terms", "sum", "tail_bound"}, {}};
  for (const auto& term : r.terms) t.rows.push_back({term.s, term.terms, term.sum, term.tail_bound});
  Outcome o = Outcome::Holds;
  if (detectors) {
    if (r.sticky.fails() || r.continuity.fails()) o = Outcome::Fails;
    else if (!r.sticky.holds() || !r.continuity.holds()) o = Outcome::Inconclusive;
  }
  return {o, r.to_json(), t};
}

Result dirichlet(const std::vector<std::uint64_t>& ns) {
  const auto r = humps::dirichlet_profile(ns);
  report::Table t{{"n", "l1"}, {}};
  for (std::size_t i = 0; i < r.n_list.size(); ++i) t.rows.push_back({r.n_list[i], r.l1[i]});
  return {Outcome::Holds, r.to_json(), t};
}

Result upcrossings(const Target& target, double a, double b, const std::vector<double>& window,
                   const ResolutionSchedule& sched) {
  if (!(a < b)) throw UsageError("need a < b");
  const auto fam = resolve_family(target.family);
  const auto f = target_oracle(target, fam);
  Interval w = fam.domain.span.intersect(Interval::closed(0.0, 1.0));
  if (!window.empty()) {
    if (window.size() != 2 || !(window[0] < window[1])) throw UsageError("--window takes lo,hi with lo < hi");
    w = fam.domain.span.intersect(Interval::closed(window[0], window[1]));
  }
  const auto count = functionals::upcrossings(f, a, b, w, sched);
  const bool exact = f.structure() == Structure::PiecewisePoly;
  json body{{"family", fam.name}, {"a", a}, {"b", b}, {"window", {w.lo, w.hi}}, {"count", count},
            {"exact", exact}, {"n", target.n ? json(*target.n) : json("limit")}};
  return {Outcome::Holds, body, report::Table{{"a", "b", "count"}, {{a, b, count}}}};
}

Result limsup(const Target& target, double t, const std::string& tau_kind, const ResolutionSchedule&) {
  const auto fam = resolve_family(target.family);
  const auto f = target_oracle(target, fam);
  if (!fam.domain.contains(t)) throw UsageError("t is outside the family's domain");
  const auto tau = time_sequence(tau_kind, t);
  functionals::LimsupResult r;
  try {
    r = functionals::limsup_along(f, tau);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  json body{{"family", fam.name}, {"tau", tau.to_json()}, {"result", r.to_json()},
            {"n", target.n ? json(*target.n) : json("limit")}};
  return {Outcome::Holds, body, report::Table{{"t", "limsup", "liminf", "exact"}, {{t, r.S, r.I, r.exact}}}};
}

Result property(const Target& target, const std::string& kind, double t, const ResolutionSchedule& sched) {
  using functionals::Property;
  const auto fam = resolve_family(target.family);
  const auto f = target_oracle(target, fam);
  Property p;
  if (kind == "continuous") p = Property::continuous_at(t);
  else if (kind == "right-continuous") p = Property::right_continuous_at(t);
  else if (kind == "left-limit") p = Property::left_limit_at(t);
  else if (kind == "cadlag") p = Property::cadlag();
  else if (kind == "locally-bounded") p = Property::locally_bounded();
  else if (kind == "lsc") p = Property::lower_sc(t);
  else if (kind == "usc") p = Property::upper_sc(t);
  else
    throw UsageError("unknown property '" + kind +
                     "' (valid: continuous, right-continuous, left-limit, cadlag, locally-bounded, lsc, usc)");
  const auto v = functionals::check_property(f, p, sched);
  return from_verdict(v, json{{"family", fam.name}, {"property", p.to_json()},
                              {"n", target.n ? json(*target.n) : json("limit")}});
}

Result cluster(const std::string& family, const std::string& double_name, const std::string& tau, double t,
               std::uint64_t box, double eps) {
  doubleseq::ClusterPolicy policy;
  policy.eps = eps;
  policy.validate();
  json body = json::object();
  std::optional<doubleseq::DoubleSequenceOracle> sigma;
  if (!double_name.empty()) {
    std::string names;
    for (const auto& b : doubleseq::builtin_double_sequences()) {
      names += (names.empty() ? "" : ", ") + b.sigma.name;
      if (b.sigma.name != double_name) continue;
      sigma = b.sigma;
      body["flat_on_edges"] = doubleseq::flat_on_edges(b.sigma, b.kappa, b.tol).to_json();
    }
    if (!sigma) throw UsageError("unknown double sequence '" + double_name + "' (valid: " + names + ")");
  } else {
    if (family.empty()) throw UsageError("cluster needs --family or --double");
    const auto fam = resolve_family(family);
    if (!fam.domain.contains(t)) throw UsageError("t is outside the family's domain");
    sigma = doubleseq::from_family(fam, time_sequence(tau, t), box);
  }
  const auto cands = doubleseq::double_cluster_candidates(*sigma, policy);
  report::Table table{{"value", "rows", "cols"}, {}};
  json list = json::array();
  for (const auto& c : cands) {
    list.push_back(c.to_json());
    table.rows.push_back({c.value, c.rows.size(), c.cols.size()});
  }
  body["sigma"] = sigma->name;
  body["eps"] = eps;
  body["candidates"] = list;
  return {Outcome::Holds, body, table};
}

Result compactness(const std::string& family, const ResolutionSchedule& sched) {
  const auto fam = resolve_family(family);
  return from_verdict(doubleseq::compactness_diagnostic(fam, sched), json{{"family", fam.name}});
}

Result ls_norm(const std::string& input, std::optional<std::uint64_t> unit) {
  using seqspace::TailedSequence;
  TailedSequence u;
  if (unit) {
    u = TailedSequence::unit(*unit);
  } else {
    if (input.empty()) throw UsageError("ls-norm needs --in or --unit");
    try {
      u = TailedSequence::from_json(read_json_file(input));
      u.validate();
    } catch (const Error& e) {
      throw UsageError(input + ": " + e.what());
    } catch (const json::exception& e) {
      throw UsageError(input + ": " + e.what());
    }
  }
  json body{{"sequence", u.to_json()},
            {"ls_norm", seqspace::ls_norm(u)},
            {"sup_norm", seqspace::sup_norm(u)},
            {"limsup", u.limsup_abs()}};
  report::Table t{{"k", "u"}, {}};
  for (std::uint64_t k = 0; k < u.K() + 8; ++k) t.rows.push_back({k, u(k)});
  return {Outcome::Holds, body, t};
}

Result suite(const battery::Options& opt) {
  const auto all = battery::run_all(opt);
  json list = json::array();
  report::Table t{{"id", "name", "pass"}, {}};
  bool ok = true;
  for (const auto& c : all) {
    list.push_back(c.to_json());
    t.rows.push_back({c.id, c.name, c.pass ? "pass" : "fail"});
    ok = ok && c.pass;
  }
  return {ok ? Outcome::Holds : Outcome::Fails, json{{"criteria", list}, {"seed", opt.seed}}, t};
}

}  // namespace stickylab::cli
