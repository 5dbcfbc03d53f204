#include "battery.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <utility>

#include "stickylab/catalog.hpp"
#include "stickylab/convergence.hpp"
#include "stickylab/doubleseq.hpp"
#include "stickylab/functionals.hpp"
#include "stickylab/humps.hpp"
#include "stickylab/seqspace.hpp"

namespace stickylab::battery {

json Criterion::to_json() const {
  return json{{"id", id}, {"name", name}, {"pass", pass}, {"budget_seconds", budget}, {"detail", detail}};
}

namespace {

// body fills detail and returns pass; the runtime budget is part of pass.
Criterion timed(int id, std::string name, double budget, const std::function<bool(json&)>& body) {
  Criterion c;
  c.id = id;
  c.name = std::move(name);
  c.budget = budget;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(c.detail);
  } catch (const std::exception& e) {
    c.detail["error"] = e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.pass = ok && (budget <= 0.0 || c.seconds < budget);
  return c;
}

// Composite Simpson rule; exact for the affine integrands used below.
double simpson(const std::function<double(double)>& f, double a, double b, int m = 2048) {
  const double h = (b - a) / m;
  double s = f(a) + f(b);
  for (int i = 1; i < m; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// Distance on the circle R/Z.
double circ(double x) {
  x -= std::floor(x);
  return std::min(x, 1.0 - x);
}

}  // namespace

Criterion lemma_exactness(const Options& opt) {
  return timed(1, "lemma exactness", 10.0, [&](json& d) {
    const double t0 = 0.375;  // keeps [t0 - 1/4, t0 + 1/2] inside (0, 1)
    const double grid = 1.0 / opt.sched.base_grid;
    const std::vector<std::uint64_t> ks{4, 8, 16, 32, 64};
    json cases = json::array();
    bool ok = true;
    double worst_rel = 0.0, worst_quad = 0.0;
    for (auto k : ks)
      for (auto n : ks) {
        if (n < k) continue;
        for (double alpha : {1.0, 2.0}) {
          const auto r = humps::lemma_check(k, n, alpha, t0);
          const double kd = static_cast<double>(k), nd = static_cast<double>(n);
          const double predicted = kd * kd * std::abs(alpha) / (2.0 * nd);
          const double rel = std::abs(r.measured_sup - predicted) / predicted;
          // Value at t0 by quadrature of zeta(t0 - u) * alpha n eta(n u) over the kernel support.
          auto zeta = [&](double x) { return std::max(0.0, kd - kd * kd * circ(x - t0)); };
          const double h = 1.0 / (2.0 * nd);
          const double quad = 2.0 * alpha * nd *
                              (simpson([&](double u) { return zeta(t0 - u); }, 0.0, h) -
                               simpson([&](double u) { return zeta(t0 - u); }, h, 2.0 * h));
          const double quad_rel = std::abs(r.value_at_t0 - quad) / predicted;
          const double lo = t0 - 1.0 / kd, hi = t0 + 1.0 / kd + 1.0 / nd;
          const bool hull_ok = !r.hull.empty() && r.hull.lo >= lo - 1e-12 && r.hull.hi <= hi + 1e-12;
          // The sup is attained on the plateau [t0 - 1/k + 1/n, t0]; t0 must belong to it.
          const bool arg_ok = std::abs(std::abs(r.value_at_t0) - r.measured_sup) <= 1e-9 * predicted &&
                              r.argmax <= t0 + grid && r.argmax >= t0 - 1.0 / kd + 1.0 / nd - grid;
          const bool pass = rel <= 1e-9 && quad_rel <= 1e-9 && hull_ok && arg_ok;
          worst_rel = std::max(worst_rel, rel);
          worst_quad = std::max(worst_quad, quad_rel);
          ok = ok && pass;
          cases.push_back(json{{"k", k}, {"n", n}, {"alpha", alpha}, {"sup", r.measured_sup},
                               {"predicted", predicted}, {"argmax", r.argmax}, {"value_at_t0", r.value_at_t0}, {"hull", {r.hull.lo, r.hull.hi}},
                               {"pass", pass}});
        }
      }
    d = json{{"cases", cases}, {"max_relative_error", worst_rel}, {"max_quadrature_error", worst_quad}};
    return ok;
  });
}

Criterion gliding_hump(const Options&) {
  return timed(2, "gliding hump signature", 20.0, [&](json& d) {
    std::vector<std::uint64_t> ns;
    for (std::uint64_t n = 1; n <= 1024; ++n) ns.push_back(n);
    const auto params = humps::SpikeSumParams::defaults(6);
    const auto r = humps::banach_steinhaus_experiment(params, ns);

    bool blowup = r.sup_at_ki.size() == 6;
    for (std::size_t i = 2; i < r.sup_at_ki.size(); ++i) blowup = blowup && r.sup_at_ki[i] > r.sup_at_ki[i - 1];

    std::uint64_t nonzero = 0;
    for (std::size_t j = 0; j < ns.size(); ++j)
      if (ns[j] >= 4 && r.value_at_zero[j] != 0.0) ++nonzero;

    // Independent value at t_i for n = k_i: beta_i alpha_n k_i^2 / (2 n).
    double oracle_err = 0.0;
    for (std::size_t i = 0; i < params.size(); ++i) {
      const double k = params.k[i];
      const double want = params.beta[i] * (k / std::log(k + 2.0)) * k * k / (2.0 * k);
      oracle_err = std::max(oracle_err, std::abs(r.value_at_ti[i] - want) / std::abs(want));
    }

    json ratios = json::array();
    bool decay = true;
    for (const auto& row : r.probe_values) {
      double mx = 0.0;
      for (double v : row) mx = std::max(mx, std::abs(v));
      const double ratio = mx > 0.0 ? std::abs(row.back()) / mx : 0.0;
      ratios.push_back(ratio);
      decay = decay && ratio < 0.1;
    }
    d = json{{"sup_at_ki", r.sup_at_ki},
             {"blowup_increasing", blowup},
             {"zero_at_origin_violations", nonzero},
             {"value_at_ti_oracle_error", oracle_err},
             {"decay_ratio_at_1024", ratios},
             {"decay_below_10pct", decay}};
    return blowup && nonzero == 0 && oracle_err <= 1e-9 && decay;
  });
}

Criterion poisson_zero(const Options& opt) {
  return timed(3, "poisson continuity at zero", 5.0, [&](json& d) {
    const std::vector<double> s_list{0.05, 0.02, 0.01};
    const auto P = humps::poisson_limit(humps::PoissonInput::builtin(), s_list, opt.sched);
    auto xi = [](double x) { return (3.0 * x * x - 2.0 * x * x * x * x) * std::exp(-x * x); };
    json rows = json::array();
    bool ok = true;
    for (std::size_t i = 0; i < s_list.size(); ++i) {
      const double s = s_list[i];
      // Beyond |n s| = 40 every term is below 2 x^4 e^{-x^2} < 1e-690: the tail is zero in doubles.
      const auto N = static_cast<std::int64_t>(std::ceil(40.0 / s));
      double sum = xi(0.0);
      for (std::int64_t n = N; n >= 1; --n) sum += 2.0 * xi(static_cast<double>(n) * s);
      const double tail_log10 = std::log10(4.0 * std::pow(40.0, 4) * (1.0 / s + 1.0)) - 1600.0 / std::log(10.0);
      const double lib = P.terms[i].sum;
      const bool pass = std::abs(sum) <= 1e-6 && std::abs(lib - sum) <= 1e-12;
      ok = ok && pass;
      rows.push_back(json{{"s", s}, {"direct_sum", sum}, {"library_sum", lib}, {"terms", N},
                          {"tail_bound_log10", tail_log10}, {"pass", pass}});
    }
    d = json{{"sums", rows}, {"sticky", to_string(P.sticky.outcome)}, {"continuity", to_string(P.continuity.outcome)}};
    return ok && P.sticky.holds() && P.continuity.holds();
  });
}

namespace {

struct Tally {
  std::uint64_t tp = 0, tn = 0, fp = 0, fn = 0, inconclusive = 0;
  void add(Tri label, Outcome got) {
    if (label == Tri::Unknown) return;
    if (got == Outcome::Inconclusive) ++inconclusive;
    else if (label == Tri::Yes) (got == Outcome::Holds ? tp : fn)++;
    else (got == Outcome::Fails ? tn : fp)++;
  }
  bool exact() const { return fp == 0 && fn == 0 && inconclusive == 0; }
  json to_json() const { return json{{"tp", tp}, {"tn", tn}, {"fp", fp}, {"fn", fn}, {"inconclusive", inconclusive}}; }
};

// Holds when the limit is continuous at every probe point, Fails at the first
// failing point.
Outcome limit_continuity(const SequenceFamily& fam, const FunctionOracle& limit, const ResolutionSchedule& sched) {
  Outcome out = Outcome::Holds;
  for (double t : probe_points(fam.domain, sched, fam.probes)) {
    const auto v = functionals::check_property(limit, functionals::Property::continuous_at(t), sched);
    if (v.fails()) return Outcome::Fails;
    if (!v.holds()) out = Outcome::Inconclusive;
  }
  return out;
}

}  // namespace

Criterion detector_soundness(const Options& opt) {
  return timed(4, "detector soundness", 60.0, [&](json& d) {
    const auto& sched = opt.sched;
    Tally pointwise, sticky, lu, continuity;
    std::uint64_t labelled = 0, chain_violations = 0;
    json rows = json::array();
    for (const auto& e : catalog::catalog_list()) {
      const auto fam = catalog::make_family(e.spec);
      const auto& lab = e.label;
      const bool has_label = lab.sticky != Tri::Unknown || lab.locally_uniform != Tri::Unknown ||
                             lab.limit_continuous != Tri::Unknown;
      if (!has_label) continue;
      ++labelled;
      json row{{"family", e.name}};
      if (lab.pointwise_limit) {
        const auto& lim = *lab.pointwise_limit;
        const auto p = convergence::detect_pointwise(fam, lim, sched);
        const auto s = convergence::detect_sticky(fam, lim, sched);
        const auto u = convergence::detect_locally_uniform(fam, lim, sched);
        pointwise.add(Tri::Yes, p.outcome);
        sticky.add(lab.sticky, s.outcome);
        lu.add(lab.locally_uniform, u.outcome);
        if ((u.holds() && !s.holds()) || (s.holds() && !p.holds())) ++chain_violations;
        row["pointwise"] = to_string(p.outcome);
        row["sticky"] = to_string(s.outcome);
        row["locally_uniform"] = to_string(u.outcome);
        if (lab.limit_continuous != Tri::Unknown) {
          const auto c = limit_continuity(fam, lim, sched);
          continuity.add(lab.limit_continuous, c);
          row["limit_continuous"] = to_string(c);
        }
      } else {
        // No limit: the Cauchy form decides stickiness.
        const auto c = convergence::sticky_cauchy(fam, sched);
        sticky.add(lab.sticky, c.outcome);
        row["sticky"] = to_string(c.outcome);
      }
      row["label"] = json{{"sticky", to_string(lab.sticky)},
                          {"locally_uniform", to_string(lab.locally_uniform)},
                          {"limit_continuous", to_string(lab.limit_continuous)}};
      rows.push_back(row);
    }
    const bool exact = pointwise.exact() && sticky.exact() && lu.exact() && continuity.exact();
    d = json{{"families", rows},
             {"labelled", labelled},
             {"confusion",
              {{"pointwise", pointwise.to_json()},
               {"sticky", sticky.to_json()},
               {"locally_uniform", lu.to_json()},
               {"limit_continuous", continuity.to_json()}}},
             {"chain_violations", chain_violations}};
    return labelled >= 10 && exact && chain_violations == 0;
  });
}


namespace {

// tau with its offset compressed so the tail window (k in (32, 64]) sits inside
// (t - eta, t + eta). Throws when doubles cannot resolve the tail near t.
functionals::TimeSequence tail_within(functionals::TimeSequence tau, double eta) {
  tau.k_max = 64;
  tau.tail_window = 32;
  const double reach = std::abs(tau.term(tau.k_max - tau.tail_window + 1) - tau.limit);
  if (reach >= eta / 2.0) {
    const double c = eta / (2.0 * reach);
    tau.term = [orig = tau.term, lim = tau.limit, c](std::uint64_t k) { return lim + c * (orig(k) - lim); };
  }
  tau.validate();
  return tau;
}

// Every n that is the first, the last, or at least double the previous pick.
std::vector<std::pair<std::uint64_t, std::size_t>> thinned(const json& eta_levels) {
  std::vector<std::pair<std::uint64_t, std::size_t>> all, out;
  for (const auto& pair : eta_levels) all.emplace_back(pair.at(0).get<std::uint64_t>(), pair.at(1).get<std::size_t>());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (out.empty() || i + 1 == all.size() || all[i].first >= 2 * out.back().first) out.push_back(all[i]);
  return out;
}

}  // namespace

Criterion preservation(const Options& opt) {
  return timed(5, "preservation suite", 30.0, [&](json& d) {
    const auto& sched = opt.sched;
    std::vector<double> levels;
    for (int i = -4; i <= 4; ++i) levels.push_back(0.25 * i);
    json rows = json::array();
    bool ok = true;
    for (const auto& e : catalog::catalog_list()) {
      if (!e.label.pointwise_limit) continue;
      const auto fam = catalog::make_family(e.spec);
      const auto& limit = *e.label.pointwise_limit;
      const auto v = convergence::detect_sticky(fam, limit, sched);
      if (!v.holds()) continue;

      // Property checks named by the label.
      bool props = true;
      if (e.label.limit_continuous != Tri::Unknown) {
        const auto c = limit_continuity(fam, limit, sched);
        props = (e.label.limit_continuous == Tri::Yes) ? c == Outcome::Holds : c == Outcome::Fails;
        if (e.label.limit_continuous == Tri::Yes)
          props = props && functionals::check_property(limit, functionals::Property::locally_bounded(), sched).holds();
      }

      // limsup / liminf along every built-in time sequence, beyond each rung's N.
      std::uint64_t limsup_checks = 0, limsup_failures = 0, limsup_unresolvable = 0, limsup_unresolved_rungs = 0,
                    N_all = 1;
      double worst_excess = 0.0;
      for (const auto& pt : v.certificate.at("points")) {
        const double t = pt.at("t").get<double>();
        const auto taus = functionals::builtin_time_sequences(fam.domain, t);
        for (const auto& r : pt.at("rungs")) {
          if (r.at("status") != "resolved") {
            ++limsup_unresolved_rungs;
            continue;
          }
          const double eps = r.at("eps").get<double>();
          N_all = std::max(N_all, r.at("N").get<std::uint64_t>());
          for (auto [n, l] : thinned(r.at("eta_level"))) {
            const auto fn = fam(n);
            for (const auto& tau0 : taus) {
              functionals::TimeSequence tau;
              try {
                tau = tail_within(tau0, sched.eta_ladder[l]);
              } catch (const Error&) {
                ++limsup_unresolvable;
                continue;
              }
              const auto a = functionals::limsup_along(fn, tau);
              const auto b = functionals::limsup_along(limit, tau);
              const double dev = std::max(std::abs(a.S - b.S), std::abs(a.I - b.I));
              ++limsup_checks;
              if (dev > eps) {
                ++limsup_failures;
                worst_excess = std::max(worst_excess, dev - eps);
              }
            }
          }
        }
      }

      // Up-crossings of the limit against every member from N_all on.
      const Interval w = fam.domain.span.intersect(Interval::closed(0.0, 1.0));
      std::vector<std::uint64_t> lim_counts, min_counts;
      for (std::size_t i = 0; i < levels.size(); ++i)
        for (std::size_t j = i + 1; j < levels.size(); ++j)
          lim_counts.push_back(functionals::upcrossings(limit, levels[i], levels[j], w, sched));
      min_counts.assign(lim_counts.size(), UINT64_MAX);
      for (auto n : sampled_indices(N_all, 2 * sched.n_max)) {
        const auto fn = fam(n);
        std::size_t q = 0;
        for (std::size_t i = 0; i < levels.size(); ++i)
          for (std::size_t j = i + 1; j < levels.size(); ++j, ++q)
            min_counts[q] = std::min(min_counts[q], functionals::upcrossings(fn, levels[i], levels[j], w, sched));
      }
      std::uint64_t up_failures = 0;
      for (std::size_t q = 0; q < lim_counts.size(); ++q)
        if (lim_counts[q] > min_counts[q]) ++up_failures;

      const bool pass = props && limsup_failures == 0 && up_failures == 0;
      ok = ok && pass;
      rows.push_back(json{{"family", e.name},
                          {"properties", props},
                          {"limsup_checks", limsup_checks},
                          {"limsup_failures", limsup_failures},
                          {"limsup_below_double_resolution", limsup_unresolvable},
                          {"decaying_rungs_skipped", limsup_unresolved_rungs},
                          {"limsup_worst_excess", worst_excess},
                          {"upcrossing_from_n", N_all},
                          {"upcrossing_pairs", lim_counts.size()},
                          {"upcrossing_failures", up_failures},
                          {"pass", pass}});
    }
    d = json{{"families", rows}};
    return ok && !rows.empty();
  });
}


Criterion compactness(const Options& opt) {
  return timed(6, "compactness diagnostics", 30.0, [&](json& d) {
    const auto& sched = opt.sched;
    const auto bump = doubleseq::compactness_diagnostic(catalog::builtin("scaled-bump-exp"), sched);
    const auto front = doubleseq::compactness_diagnostic(catalog::builtin("indicator-front-mollified"), sched);
    const bool front_ok = front.fails() && front.witness.contains("x") &&
                          std::abs(front.witness.at("x").get<double>()) <= 1e-12;

    const auto sinf = catalog::builtin("sin-no-limit");
    json sin_rho = json::array();
    double sin_min = 1.0;
    for (int i = 1; i <= 12; ++i) {
      const double s = 0.25 * i;
      const double rho = doubleseq::hump_modulus(sinf, s, 0.0, sched).rho;
      sin_min = std::min(sin_min, rho);
      sin_rho.push_back({s, rho});
    }

    // Humps of members n in (n_max, 2 n_max] sit below 1/n_max.
    const auto train = catalog::builtin("bump-train");
    json train_rho = json::array();
    double train_max = 0.0;
    for (double s = 2.0 / static_cast<double>(sched.n_max); s <= 2.0; s *= 2.0) {
      const double rho = doubleseq::hump_modulus(train, s, 0.0, sched).rho;
      train_max = std::max(train_max, rho);
      train_rho.push_back({s, rho});
    }

    json doubles = json::array();
    bool flat_ok = true;
    for (const auto& b : doubleseq::builtin_double_sequences()) {
      const auto flat = doubleseq::flat_on_edges(b.sigma, b.kappa, b.tol);
      const doubleseq::ClusterPolicy policy;
      const auto cands = doubleseq::double_cluster_candidates(b.sigma, policy);
      json values = json::array();
      for (const auto& c : cands) values.push_back(c.value);
      bool listed = true;
      if (flat.holds()) {
        const double L = flat.certificate.at("L").get<double>();
        listed = std::any_of(cands.begin(), cands.end(),
                             [&](const auto& c) { return std::abs(c.value - L) <= policy.eps; });
      }
      flat_ok = flat_ok && listed;
      doubles.push_back(json{{"name", b.sigma.name},
                             {"flat", to_string(flat.outcome)},
                             {"L", flat.holds() ? flat.certificate.at("L") : json(nullptr)},
                             {"candidates", values},
                             {"listed", listed}});
    }
    d = json{{"scaled_bump", to_string(bump.outcome)},
             {"mollified_front", to_string(front.outcome)},
             {"mollified_front_witness", front.witness},
             {"sin_rho", sin_rho},
             {"sin_rho_min", sin_min},
             {"bump_train_rho", train_rho},
             {"bump_train_rho_max", train_max},
             {"double_sequences", doubles}};
    return bump.holds() && front_ok && sin_min >= 0.99 && train_max <= 1e-9 && flat_ok;
  });
}

namespace {

using seqspace::TailedSequence;

// Norm by direct summation: the weighted part to K + 64 (the rest is below
// 2^-64 times the tail bound) plus the tail's limsup.
double oracle_norm(const TailedSequence& u) {
  double lim = 0.0;
  switch (u.kind) {
    case seqspace::TailKind::Zero: lim = 0.0; break;
    case seqspace::TailKind::Constant: lim = std::abs(u.c); break;
    case seqspace::TailKind::Periodic:
      for (double x : u.pattern) lim = std::max(lim, std::abs(x));
      break;
    case seqspace::TailKind::Geometric: lim = std::abs(u.ratio) < 1.0 ? 0.0 : std::abs(u.scale); break;
  }
  double sum = 0.0;
  for (std::uint64_t k = u.K() + 64; k-- > 0;) sum += std::ldexp(std::abs(u(k)), -static_cast<int>(k));
  return sum + lim;
}

TailedSequence finite(std::vector<double> prefix) {
  TailedSequence u;
  u.prefix = std::move(prefix);
  return u;
}

bool is_zero(const TailedSequence& u) {
  for (std::uint64_t k = 0; k < u.K() + 64; ++k)
    if (u(k) != 0.0) return false;
  return oracle_norm(u) == 0.0;
}

TailedSequence random_sequence(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> val(-2.0, 2.0);
  std::uniform_int_distribution<int> len(0, 20), kind(0, 4), period(1, 5);
  const int which = kind(rng);
  if (which == 4) return TailedSequence::zero().rebased(static_cast<std::size_t>(len(rng)));
  std::vector<double> prefix(static_cast<std::size_t>(len(rng)));
  for (double& x : prefix) x = val(rng);
  switch (which) {
    case 0: return finite(prefix);
    case 1: return TailedSequence::constant(val(rng), prefix);
    case 2: {
      std::vector<double> pattern(static_cast<std::size_t>(period(rng)));
      for (double& x : pattern) x = val(rng);
      return TailedSequence::periodic(pattern, prefix);
    }
    default: return TailedSequence::geometric(0.5 * val(rng), val(rng), prefix);
  }
}

}  // namespace

Criterion ls_space(const Options& opt) {
  return timed(7, "l_s suite", 5.0, [&](json& d) {
    using namespace seqspace;
    bool units = true;
    for (int n = 0; n <= 40; ++n) units = units && ls_norm(TailedSequence::unit(n)) == std::ldexp(1.0, -n);

    const auto unit_fam = [](std::uint64_t n) { return TailedSequence::unit(n); };
    const auto front_fam = [](std::uint64_t n) { return TailedSequence::constant(1.0, std::vector<double>(n, 0.0)); };
    const auto c_units = ls_cauchy(unit_fam);
    const auto c_front = ls_cauchy(front_fam);

    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> lam(-3.0, 3.0);
    std::uint64_t failures = 0;
    double worst = 0.0;
    auto check = [&](bool cond) { failures += cond ? 0 : 1; };
    for (int i = 0; i < 200; ++i) {
      const auto u = random_sequence(rng);
      const auto v = random_sequence(rng);
      const double l = lam(rng);
      const double nu = ls_norm(u), nv = ls_norm(v);
      const double oracle = oracle_norm(u);
      const double err = std::abs(nu - oracle) / std::max(1.0, oracle);
      worst = std::max(worst, err);
      check(err <= 1e-12);
      check(nu >= 0.0);
      check((nu == 0.0) == is_zero(u));
      check(std::abs(ls_norm_combination(u, l, v, 0.0) - std::abs(l) * nu) <= 1e-12 * std::max(1.0, std::abs(l) * nu));
      check(ls_norm_combination(u, 1.0, v, 1.0) <= (nu + nv) * (1.0 + 1e-12) + 1e-12);
    }

    const auto c0 = closedness_probe(Space::from_string("c0"), unit_fam, TailedSequence::zero());
    const auto l2 = closedness_probe(
        Space::from_string("lp:2"),
        [](std::uint64_t n) {
          std::vector<double> pre(n);
          for (std::uint64_t k = 0; k < n; ++k) pre[k] = std::ldexp(1.0, -static_cast<int>(k));
          return finite(pre);
        },
        TailedSequence::geometric(0.5, 1.0));
    const auto cc = closedness_probe(
        Space::from_string("c"),
        [](std::uint64_t n) {
          return TailedSequence::constant(1.0, std::vector<double>(n, 1.0 + std::ldexp(1.0, -static_cast<int>(n))));
        },
        TailedSequence::constant(1.0));

    d = json{{"unit_norms_exact", units},
             {"unit_cauchy", to_string(c_units.outcome)},
             {"front_cauchy", to_string(c_front.outcome)},
             {"axiom_failures", failures},
             {"norm_oracle_worst", worst},
             {"closed_c0", to_string(c0.outcome)},
             {"closed_c", to_string(cc.outcome)},
             {"closed_l2", to_string(l2.outcome)}};
    return units && c_units.holds() && c_front.fails() && failures == 0 && c0.holds() && cc.holds() && l2.holds();
  });
}

std::vector<Criterion> run_all(const Options& opt) {
  return {lemma_exactness(opt), gliding_hump(opt), poisson_zero(opt), detector_soundness(opt),
          preservation(opt),    compactness(opt),  ls_space(opt)};
}

}  // namespace stickylab::battery
