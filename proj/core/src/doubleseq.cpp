#include "stickylab/doubleseq.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>

namespace stickylab::doubleseq {

void DoubleSequenceOracle::validate() const {
  if (!at) throw Error("double sequence needs an evaluation rule");
  if (i_max < 16 || j_max < 16) throw Error("double sequence box must be at least 16 x 16");
}

DoubleSequenceOracle DoubleSequenceOracle::doubled() const {
  DoubleSequenceOracle d = *this;
  d.i_max *= 2;
  d.j_max *= 2;
  return d;
}

void ClusterPolicy::validate() const {
  if (!(eps > 0.0) || row_count_min == 0 || col_count_min == 0 || rows_min == 0 || cols_min == 0)
    throw Error("cluster policy thresholds must be positive");
}

json ClusterCandidate::to_json() const { return json{{"value", value}, {"rows", rows}, {"cols", cols}}; }

ClusterCandidate cluster_evidence(const DoubleSequenceOracle& sigma, double y, const ClusterPolicy& policy) {
  ClusterCandidate c;
  c.value = y;
  auto near = [&](double v) { return std::abs(v - y) < policy.eps; };
  for (std::uint64_t i = 1; i <= sigma.i_max / 4; ++i) {
    std::uint64_t hits = 0;
    for (std::uint64_t j = sigma.j_max / 2 + 1; j <= sigma.j_max && hits < policy.row_count_min; ++j)
      if (near(sigma(i, j))) ++hits;
    if (hits >= policy.row_count_min) c.rows.push_back(i);
  }
  for (std::uint64_t j = 1; j <= sigma.j_max / 4; ++j) {
    std::uint64_t hits = 0;
    for (std::uint64_t i = sigma.i_max / 2 + 1; i <= sigma.i_max && hits < policy.col_count_min; ++i)
      if (near(sigma(i, j))) ++hits;
    if (hits >= policy.col_count_min) c.cols.push_back(j);
  }
  return c;
}

bool qualifies(const DoubleSequenceOracle& sigma, double y, const ClusterPolicy& policy) {
  const auto c = cluster_evidence(sigma, y, policy);
  return c.rows.size() >= policy.rows_min && c.cols.size() >= policy.cols_min;
}

namespace {

std::vector<ClusterCandidate> candidates_in_box(const DoubleSequenceOracle& sigma, const ClusterPolicy& policy) {
  // Bin the values of both tail regions at width eps; each bin's median is a
  // trial center.
  std::map<long long, std::vector<double>> bins;
  auto add = [&](double v) {
    if (std::isfinite(v)) bins[static_cast<long long>(std::floor(v / policy.eps))].push_back(v);
  };
  for (std::uint64_t i = 1; i <= sigma.i_max / 4; ++i)
    for (std::uint64_t j = sigma.j_max / 2 + 1; j <= sigma.j_max; ++j) add(sigma(i, j));
  for (std::uint64_t j = 1; j <= sigma.j_max / 4; ++j)
    for (std::uint64_t i = sigma.i_max / 2 + 1; i <= sigma.i_max; ++i) add(sigma(i, j));

  std::vector<ClusterCandidate> out;
  for (auto& [key, vals] : bins) {
    if (vals.size() < policy.row_count_min) continue;
    std::sort(vals.begin(), vals.end());
    const double y = vals[vals.size() / 2];
    auto c = cluster_evidence(sigma, y, policy);
    if (c.rows.size() < policy.rows_min || c.cols.size() < policy.cols_min) continue;
    // Neighbouring bins can split one cluster: keep the better supported center.
    if (!out.empty() && std::abs(out.back().value - y) < policy.eps) {
      if (c.rows.size() + c.cols.size() > out.back().rows.size() + out.back().cols.size()) out.back() = std::move(c);
      continue;
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<ClusterCandidate> double_cluster_candidates(const DoubleSequenceOracle& sigma,
                                                        const ClusterPolicy& policy) {
  sigma.validate();
  policy.validate();
  auto base = candidates_in_box(sigma, policy);
  const auto big = candidates_in_box(sigma.doubled(), policy);
  std::vector<ClusterCandidate> out;
  for (auto& c : base) {
    const bool stable =
        std::any_of(big.begin(), big.end(), [&](const ClusterCandidate& b) { return std::abs(b.value - c.value) < policy.eps; });
    if (stable) out.push_back(std::move(c));
  }
  return out;
}

Verdict flat_on_edges(const DoubleSequenceOracle& sigma, const std::function<std::uint64_t(std::uint64_t)>& kappa,
                      double tol) {
  sigma.validate();
  if (!(tol >= 0.0)) throw Error("flat_on_edges needs tol >= 0");
  const std::uint64_t box = std::min(sigma.i_max, sigma.j_max);
  for (std::uint64_t m = 2; m <= box; ++m)
    if (kappa(m) < kappa(m - 1)) throw Error("kappa must be nondecreasing");
  struct Sample {
    std::uint64_t i, j;
    double v;
  };
  std::vector<Sample> edge;
  for (std::uint64_t i = box / 4; i <= box; ++i)
    for (std::uint64_t j = box / 4; j <= box; ++j) {
      const std::uint64_t m = std::min(i, j);
      const std::uint64_t gap = i > j ? i - j : j - i;
      if (gap >= kappa(m)) edge.push_back({i, j, sigma(i, j)});
    }
  if (edge.empty()) throw Error("edge region is empty within the box; use a smaller kappa");
  const auto [lo, hi] = std::minmax_element(edge.begin(), edge.end(), [](auto& a, auto& b) { return a.v < b.v; });
  Verdict v;
  v.schedule = ResolutionSchedule::defaults();
  const double osc = hi->v - lo->v;
  if (!(osc <= tol)) {
    v.outcome = Outcome::Fails;
    v.witness = json{{"oscillation", osc},
                     {"tol", tol},
                     {"low", {{"i", lo->i}, {"j", lo->j}, {"value", lo->v}}},
                     {"high", {{"i", hi->i}, {"j", hi->j}, {"value", hi->v}}}};
    return v;
  }
  std::vector<double> vals;
  vals.reserve(edge.size());
  for (const auto& s : edge) vals.push_back(s.v);
  std::nth_element(vals.begin(), vals.begin() + static_cast<std::ptrdiff_t>(vals.size() / 2), vals.end());
  v.outcome = Outcome::Holds;
  v.certificate = json{{"L", vals[vals.size() / 2]}, {"oscillation", osc}, {"tol", tol}, {"edge_size", edge.size()}};
  return v;
}

std::vector<BuiltinDouble> builtin_double_sequences() {
  std::vector<BuiltinDouble> out;
  auto zero_kappa = [](std::uint64_t) -> std::uint64_t { return 0; };
  out.push_back({{"inverse-sum", [](std::uint64_t i, std::uint64_t j) { return 1.0 / static_cast<double>(i + j); }},
                 zero_kappa, 0.05});
  out.push_back({{"gaussian-diagonal",
                  [](std::uint64_t i, std::uint64_t j) {
                    const double d = static_cast<double>(i) - static_cast<double>(j);
                    return std::exp(-d * d);
                  }},
                 [](std::uint64_t) -> std::uint64_t { return 2; }, 0.02});
  out.push_back({{"upper-indicator", [](std::uint64_t i, std::uint64_t j) { return i < j ? 1.0 : 0.0; }}, zero_kappa,
                 0.5});
  out.push_back({{"constant", [](std::uint64_t, std::uint64_t) { return 0.5; }}, zero_kappa, 1e-12});
  out.push_back({{"bump-rows",
                  [](std::uint64_t i, std::uint64_t j) {
                    const double x = static_cast<double>(i) / static_cast<double>(j);
                    return x * std::exp(-x);
                  }},
                 [](std::uint64_t m) { return m; }, 0.05});
  return out;
}

DoubleSequenceOracle from_family(const SequenceFamily& fam, const functionals::TimeSequence& tau, std::uint64_t box) {
  struct Cache {
    std::mutex mu;
    std::map<std::uint64_t, FunctionOracle> members;
  };
  auto cache = std::make_shared<Cache>();
  DoubleSequenceOracle s;
  s.name = fam.name + "@" + tau.name;
  s.i_max = s.j_max = box;
  s.at = [fam, tau, cache](std::uint64_t i, std::uint64_t j) {
    const FunctionOracle* f = nullptr;
    {
      std::lock_guard lock(cache->mu);
      auto it = cache->members.find(i);
      if (it == cache->members.end()) it = cache->members.emplace(i, fam(i)).first;
      f = &it->second;
    }
    return (*f)(tau.term(j));
  };
  return s;
}

json HumpModulus::to_json() const {
  return json{{"rho", rho}, {"excluded_prefix", excluded_prefix}, {"outliers", outliers}};
}

namespace {

HumpModulus modulus_over(const std::vector<FunctionOracle>& tail, std::uint64_t prefix, double s, double t) {
  HumpModulus h;
  h.excluded_prefix = prefix;
  for (const auto& f : tail) h.rho = std::max(h.rho, std::abs(f(s) - f(t)));
  return h;
}

std::vector<FunctionOracle> members(const SequenceFamily& fam, std::uint64_t lo, std::uint64_t hi) {
  std::vector<FunctionOracle> out;
  out.reserve(hi - lo + 1);
  for (std::uint64_t n = lo; n <= hi; ++n) out.push_back(fam(n));
  return out;
}

// sup |p - p(x)| over the window of radius eta around x.
double window_dev(const PiecewisePoly& p, const Domain& d, double x, double eta) {
  const double c = p(x);
  const PiecewisePoly flat = PiecewisePoly::constant(d.span.lo - 1.0, d.span.hi + 1.0, c);
  const PiecewisePoly diff = PiecewisePoly::combine(p, 1.0, flat, -1.0);
  double dev = 0.0;
  for (const Interval& w : d.window(x, eta)) dev = std::max(dev, diff.sup_abs(w).value);
  return dev;
}

}  // namespace

HumpModulus hump_modulus(const SequenceFamily& fam, double s, double t, const ResolutionSchedule& sched) {
  sched.validate();
  if (!fam.domain.contains(fam.domain.wrap(s)) || !fam.domain.contains(fam.domain.wrap(t)))
    throw Error("hump_modulus points must lie in the domain");
  return modulus_over(members(fam, sched.n_max + 1, 2 * sched.n_max), sched.n_max, s, t);
}

Verdict compactness_diagnostic(const SequenceFamily& fam, const ResolutionSchedule& sched) {
  sched.validate();
  if (!fam.members_continuous) throw Error("compactness diagnostic needs members flagged continuous");
  const Domain& d = fam.domain;
  const auto all = members(fam, 1, 2 * sched.n_max);
  const std::vector<FunctionOracle> tail_hm(all.begin() + static_cast<std::ptrdiff_t>(sched.n_max), all.end());

  // The candidate is only meaningful on scales well above 1/n_max.
  const double h = std::min(0.5, std::exp2(std::ceil(std::log2(32.0 / static_cast<double>(sched.n_max)))));
  const auto grid = probe_points(d, sched, fam.probes);
  std::vector<double> nodes = grid;
  for (double x = d.span.lo; x <= d.span.hi + 1e-12; x += h) nodes.push_back(std::min(x, d.span.hi));
  if (d.periodic) nodes.push_back(1.0);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end(), [](double a, double b) { return std::abs(a - b) < 1e-12; }),
              nodes.end());

  Verdict v;
  v.schedule = sched;
  // Mean over the last quarter; stability judged over the last half.
  const std::uint64_t tail_lo = 3 * sched.n_max / 4 + 1;
  const std::uint64_t osc_lo = sched.n_max / 2 + 1;
  double bound = 0.0, max_osc = 0.0;
  std::vector<std::pair<double, double>> pts;
  for (double x : nodes) {
    const double xe = d.wrap(x);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo, sum = 0.0;
    for (std::uint64_t n = 1; n <= sched.n_max; ++n) {
      const double val = all[n - 1](xe);
      if (!std::isfinite(val)) {
        v.outcome = Outcome::Fails;
        v.witness = json{{"reason", "unbounded"}, {"x", xe}, {"n", n}};
        return v;
      }
      bound = std::max(bound, std::abs(val));
      if (n >= osc_lo) {
        lo = std::min(lo, val);
        hi = std::max(hi, val);
      }
      if (n >= tail_lo) sum += val;
    }
    max_osc = std::max(max_osc, hi - lo);
    pts.emplace_back(x, sum / static_cast<double>(sched.n_max - tail_lo + 1));
  }
  json accepted = json::array();
  for (double eps : sched.eps_ladder)
    if (max_osc < eps) accepted.push_back(eps);

  json cert{{"bound", bound}, {"tail_oscillation", max_osc}, {"accepted_eps", accepted}, {"resolution_scale", h}};
  if (accepted.empty()) {
    v.outcome = Outcome::Inconclusive;
    v.certificate = cert;
    return v;
  }

  // One padding node so the closed right end is inside the last piece.
  pts.emplace_back(pts.back().first + h, pts.back().second);
  const PiecewisePoly cand_pp = PiecewisePoly::linear_through(pts);
  const FunctionOracle cand = FunctionOracle::piecewise(
      Domain{Interval::closed(d.span.lo, d.span.hi), false}, cand_pp, Metadata{});
  ResolutionSchedule coarse = sched;
  coarse.eta_ladder.clear();
  for (double eta : sched.eta_ladder)
    if (eta >= h) coarse.eta_ladder.push_back(eta);

  json cont = json::array();
  for (double x : grid) {
    const Verdict c = functionals::check_property(cand, functionals::Property::continuous_at(x), coarse);
    if (c.holds()) {
      cont.push_back({x, "Holds"});
      continue;
    }
    const double eps = c.witness.at("eps").get<double>();
    const double dev_coarse = window_dev(cand_pp, cand.domain(), x, coarse.eta_ladder.front());
    const double dev_fine = window_dev(cand_pp, cand.domain(), x, coarse.eta_ladder.back());
    const bool decaying = coarse.eta_ladder.size() > 1 && dev_fine < 0.75 * dev_coarse;
    if (max_osc >= eps || decaying) {
      cont.push_back({x, "Holds"});
      continue;
    }
    v.outcome = Outcome::Fails;
    v.witness = c.witness;
    v.witness["reason"] = "discontinuous limit candidate";
    v.witness["x"] = x;
    v.certificate = cert;
    return v;
  }
  cert["continuity"] = cont;

  // Hump-modulus route, reported alongside.
  double rho_max = 0.0;
  for (double t : grid) {
    double rho_t = 0.0;
    for (double off = h; off <= 0.5; off *= 2.0) {
      double s = t + off;
      if (!d.periodic && s > d.span.hi) s = t - off;
      if (!d.contains(d.wrap(s))) continue;
      rho_t = std::max(rho_t, modulus_over(tail_hm, sched.n_max, d.wrap(s), t).rho);
      break;  // finest admissible s only
    }
    rho_max = std::max(rho_max, rho_t);
  }
  json below = json::array();
  for (double eps : sched.eps_ladder) below.push_back({eps, rho_max < eps});
  cert["hump_route"] = json{{"rho_max", rho_max}, {"below", below}};

  v.outcome = Outcome::Holds;
  v.certificate = cert;
  return v;
}

}  // namespace stickylab::doubleseq
