#include "stickylab/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "stickylab/convergence.hpp"

namespace stickylab::functionals {

// ------------------------------------------------------------ TimeSequence

TimeSequence TimeSequence::reciprocal(double limit, double offset) {
  TimeSequence s;
  s.name = "reciprocal";
  s.limit = limit;
  s.term = [limit, offset](std::uint64_t k) { return limit + offset / static_cast<double>(k); };
  return s;
}

TimeSequence TimeSequence::geometric(double limit, double offset) {
  TimeSequence s;
  s.name = "geometric";
  s.limit = limit;
  s.term = [limit, offset](std::uint64_t k) { return limit + offset * std::exp2(-static_cast<double>(k) / 64.0); };
  return s;
}

void TimeSequence::validate() const {
  if (!term) throw Error("time sequence needs a term rule");
  if (k_max < 2 || tail_window < 1 || tail_window > k_max) throw Error("time sequence needs 1 <= tail_window <= k_max");
  double prev = std::numeric_limits<double>::infinity();
  for (std::uint64_t k = k_max / 2 + 1; k <= k_max; ++k) {
    const double d = std::abs(term(k) - limit);
    if (!(d < prev)) throw Error("time sequence does not approach its limit on (k_max/2, k_max]");
    prev = d;
  }
}

json TimeSequence::to_json() const {
  return json{{"name", name}, {"limit", limit}, {"k_max", k_max}, {"tail_window", tail_window}};
}

std::vector<TimeSequence> builtin_time_sequences(const Domain& d, double t) {
  std::vector<TimeSequence> out;
  const double room_right = d.periodic ? 0.5 : d.span.hi - t;
  const double room_left = d.periodic ? 0.5 : t - d.span.lo;
  if (room_right > 0.0) {
    const double off = std::min(1.0, room_right) * 0.5;
    out.push_back(TimeSequence::reciprocal(t, off));
    out.push_back(TimeSequence::geometric(t, off));
  }
  if (room_left > 0.0) {
    const double off = -std::min(1.0, room_left) * 0.5;
    auto r = TimeSequence::reciprocal(t, off);
    r.name = "reciprocal-left";
    out.push_back(r);
  }
  return out;
}

json LimsupResult::to_json() const { return json{{"S", S}, {"I", I}, {"exact", exact}}; }

LimsupResult limsup_along(const FunctionOracle& f, const TimeSequence& tau) {
  tau.validate();
  const Domain& d = f.domain();
  LimsupResult r;
  r.S = -std::numeric_limits<double>::infinity();
  r.I = std::numeric_limits<double>::infinity();
  int side = 0;
  for (std::uint64_t k = tau.k_max - tau.tail_window + 1; k <= tau.k_max; ++k) {
    const double tk = tau.term(k);
    if (!d.contains(d.wrap(tk))) throw Error("time sequence term lies outside the domain");
    const double v = f(tk);
    r.S = std::max(r.S, v);
    r.I = std::min(r.I, v);
    const int sgn = tk > tau.limit ? 1 : (tk < tau.limit ? -1 : 0);
    side = (k == tau.k_max - tau.tail_window + 1) ? sgn : (side == sgn ? side : 2);
  }
  if (const auto* p = f.as_piecewise(); p && (side == 1 || side == -1)) {
    const double L = d.wrap(tau.limit);
    const double lim = side == 1 ? p->right_limit(L) : (d.periodic && L == 0.0 ? p->left_limit(1.0) : p->left_limit(L));
    r.S = r.I = lim;
    r.exact = true;
  }
  return r;
}

// ------------------------------------------------------------- upcrossings

namespace {

struct Scan {
  double a, b;
  bool below = false;
  std::uint64_t count = 0;
  void feed(double v) {
    if (!below) {
      if (v < a) below = true;
    } else if (v > b) {
      ++count;
      below = false;
    }
  }
};

}  // namespace

std::uint64_t upcrossings(const FunctionOracle& f, double a, double b, const Interval& w,
                          const ResolutionSchedule& sched) {
  if (!(a < b)) throw Error("upcrossings needs a < b");
  if (w.empty()) throw Error("empty window");
  if (!w.within(f.domain().span)) throw Error("window lies outside the domain");
  Scan scan{a, b};
  const auto* p = f.as_piecewise();
  if (!p) {
    for (auto [t, v] : eval_on_grid(f, w, sched)) scan.feed(v);
    return scan.count;
  }
  // Exact: on each open sub-interval between consecutive roots of f - a and
  // f - b the comparisons are constant, so one interior value represents it.
  std::vector<double> cuts{w.lo, w.hi};
  for (double x : p->breaks())
    if (x > w.lo && x < w.hi) cuts.push_back(x);
  for (const auto& pv : p->points())
    if (pv.t > w.lo && pv.t < w.hi) cuts.push_back(pv.t);
  const auto& br = p->breaks();
  for (std::size_t i = 0; i < p->pieces().size(); ++i) {
    const double lo = std::max(br[i], w.lo), hi = std::min(br[i + 1], w.hi);
    if (!(hi > lo)) continue;
    for (double level : {a, b}) {
      const Polynomial q = p->pieces()[i] - Polynomial::constant(level);
      for (double r : q.roots_in(lo - br[i], hi - br[i]))
        if (br[i] + r > w.lo && br[i] + r < w.hi) cuts.push_back(br[i] + r);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const double x = cuts[i];
    const bool endpoint_ok = !((i == 0 && w.lo_open) || (i + 1 == cuts.size() && w.hi_open));
    if (endpoint_ok) scan.feed(f(x));
    if (i + 1 < cuts.size()) scan.feed(f(0.5 * (x + cuts[i + 1])));
  }
  return scan.count;
}

// -------------------------------------------------------------- properties

std::string Property::name() const {
  switch (kind) {
    case PropertyKind::ContinuousAt: return "ContinuousAt";
    case PropertyKind::RightContinuousAt: return "RightContinuousAt";
    case PropertyKind::LeftLimitAt: return "LeftLimitAt";
    case PropertyKind::Cadlag: return "Cadlag";
    case PropertyKind::LocallyBounded: return "LocallyBounded";
    case PropertyKind::LowerSC: return "LowerSC";
    case PropertyKind::UpperSC: return "UpperSC";
  }
  return "?";
}

json Property::to_json() const {
  json j{{"kind", name()}};
  if (kind != PropertyKind::Cadlag && kind != PropertyKind::LocallyBounded) j["t"] = t;
  return j;
}

namespace {

enum class Side { Both, Right, Left };

// Window around t restricted to one side, as pieces inside [span.lo, span.hi].
std::vector<Interval> side_window(const Domain& d, double t, double eta, Side side) {
  if (side == Side::Both) return d.window(t, eta);
  std::vector<Interval> raw;
  if (side == Side::Right) raw.push_back(Interval::right_open(t, t + eta));
  else raw.push_back(Interval::open(t - eta, t));
  std::vector<Interval> out;
  for (Interval w : raw) {
    if (d.periodic) {
      if (w.hi > 1.0) {
        out.push_back(Interval::right_open(0.0, w.hi - 1.0));
        w.hi = 1.0;
        w.hi_open = true;
      }
      if (w.lo < 0.0) {
        out.push_back(Interval::open(1.0 + w.lo, 1.0));
        w.lo = 0.0;
        w.lo_open = false;
      }
    }
    const Interval c = w.intersect(d.span);
    if (!c.empty()) out.push_back(c);
  }
  return out;
}

struct Dev {
  double value = 0.0;
  double s = 0.0;
  bool exact = false;
};

// Deviation of f on the window at level eta for a single-point property.
Dev deviation(const FunctionOracle& f, const Property& p, double eta, const ResolutionSchedule& sched) {
  const Domain& d = f.domain();
  const double t = d.wrap(p.t);
  const double ft = f(t);
  const auto* pp = f.as_piecewise();
  const Side side = p.kind == PropertyKind::RightContinuousAt ? Side::Right
                    : p.kind == PropertyKind::LeftLimitAt      ? Side::Left
                                                               : Side::Both;
  const auto pieces = side_window(d, t, eta, side);
  Dev out{0.0, t, false};
  if (pieces.empty()) return out;

  double ref = ft;
  if (p.kind == PropertyKind::LeftLimitAt && pp)
    ref = (d.periodic && t == 0.0) ? pp->left_limit(1.0) : pp->left_limit(t);

  const bool exact_mode = pp && (p.kind == PropertyKind::ContinuousAt || p.kind == PropertyKind::RightContinuousAt ||
                                 p.kind == PropertyKind::LeftLimitAt);
  if (exact_mode) {
    const double lo = std::min(d.span.lo, pp->breaks().empty() ? d.span.lo : pp->breaks().front()) - 1.0;
    const double hi = std::max(d.span.hi, pp->breaks().empty() ? d.span.hi : pp->breaks().back()) + 1.0;
    const PiecewisePoly diff = PiecewisePoly::combine(*pp, 1.0, PiecewisePoly::constant(lo, hi, ref), -1.0);
    out.exact = true;
    bool have = false;
    for (const Interval& w : pieces) {
      const Extremum e = diff.sup_abs(w);
      if (!have || e.value > out.value) {
        out.value = e.value;
        out.s = e.arg;
        have = true;
      }
    }
    return out;
  }

  std::vector<double> vals, at;
  const FunctionOracle* self[] = {&f};
  for (const Interval& w : pieces)
    for (double s : window_samples(w, sched, self)) {
      vals.push_back(f(s));
      at.push_back(s);
    }
  if (pp) {
    // One-sided limits at t are approached inside every punctured window.
    if (side != Side::Left) {
      vals.push_back(pp->right_limit(t));
      at.push_back(t);
    }
    if (side != Side::Right) {
      vals.push_back((d.periodic && t == 0.0) ? pp->left_limit(1.0) : pp->left_limit(t));
      at.push_back(t);
    }
  }
  auto take = [&](double v, double s) {
    if (v > out.value || std::isnan(v)) {
      out.value = v;
      out.s = s;
    }
  };
  if (p.kind == PropertyKind::LeftLimitAt) {
    if (vals.empty()) return out;
    const auto [mn, mx] = std::minmax_element(vals.begin(), vals.end());
    out.value = *mx - *mn;
    out.s = at[static_cast<std::size_t>(mx - vals.begin())];
    return out;
  }
  for (std::size_t i = 0; i < vals.size(); ++i) {
    switch (p.kind) {
      case PropertyKind::LowerSC: take(std::max(0.0, ft - vals[i]), at[i]); break;
      case PropertyKind::UpperSC: take(std::max(0.0, vals[i] - ft), at[i]); break;
      default: take(std::abs(vals[i] - ft), at[i]); break;
    }
  }
  return out;
}

Verdict point_property(const FunctionOracle& f, const Property& p, const ResolutionSchedule& sched) {
  const Domain& d = f.domain();
  if (!d.contains(d.wrap(p.t))) throw Error("property point lies outside the domain");
  const double eps_min = *std::min_element(sched.eps_ladder.begin(), sched.eps_ladder.end());
  std::vector<Dev> devs;
  for (double eta : sched.eta_ladder) {
    devs.push_back(deviation(f, p, eta, sched));
    if (devs.back().value < eps_min) break;
  }
  Verdict v;
  v.schedule = sched;
  json rungs = json::array();
  for (double eps : sched.eps_ladder) {
    std::size_t l = 0;
    while (l < devs.size() && !(devs[l].value < eps)) ++l;
    if (l == devs.size()) {
      const Dev& last = devs.back();
      v.outcome = Outcome::Fails;
      v.witness = json{{"property", p.to_json()}, {"eps", eps}, {"eta", sched.eta_ladder[devs.size() - 1]},
                       {"s", last.s}, {"gap", last.value}};
      v.certificate = json{{"property", p.to_json()}, {"rungs", rungs}};
      return v;
    }
    rungs.push_back(json{{"eps", eps}, {"eta", sched.eta_ladder[l]}, {"eta_level", l}, {"sup", devs[l].value},
                         {"exact", devs[l].exact}});
  }
  v.outcome = Outcome::Holds;
  v.certificate = json{{"property", p.to_json()}, {"rungs", rungs}};
  return v;
}

std::vector<double> property_points(const FunctionOracle& f, const ResolutionSchedule& sched) {
  std::vector<double> extra;
  if (const auto* pp = f.as_piecewise())
    for (double b : pp->structural_points()) extra.push_back(b);
  for (double c : f.metadata().critical_points) extra.push_back(c);
  return probe_points(f.domain(), sched, extra);
}

}  // namespace

Verdict check_property(const FunctionOracle& f, const Property& p, const ResolutionSchedule& sched) {
  sched.validate();
  switch (p.kind) {
    case PropertyKind::ContinuousAt:
    case PropertyKind::RightContinuousAt:
    case PropertyKind::LeftLimitAt:
    case PropertyKind::LowerSC:
    case PropertyKind::UpperSC: return point_property(f, p, sched);
    case PropertyKind::Cadlag: {
      json pts = json::array();
      for (double t : property_points(f, sched)) {
        for (const Property& q : {Property::right_continuous_at(t), Property::left_limit_at(t)}) {
          Verdict v = point_property(f, q, sched);
          if (!v.holds()) {
            v.certificate["property"] = p.to_json();
            return v;
          }
        }
        pts.push_back(t);
      }
      Verdict v;
      v.schedule = sched;
      v.outcome = Outcome::Holds;
      v.certificate = json{{"property", p.to_json()}, {"points", pts}};
      return v;
    }
    case PropertyKind::LocallyBounded: {
      json bounds = json::array();
      const double radius = sched.eta_ladder.front();
      for (double t : property_points(f, sched)) {
        double sup = 0.0;
        for (const Interval& w : f.domain().window(t, radius)) sup = std::max(sup, sup_on_window(f, w, sched).value);
        if (!std::isfinite(sup)) {
          Verdict v;
          v.schedule = sched;
          v.outcome = Outcome::Fails;
          v.witness = json{{"property", p.to_json()}, {"t", t}, {"eta", radius}, {"sup", nullptr}};
          return v;
        }
        bounds.push_back({t, sup});
      }
      Verdict v;
      v.schedule = sched;
      v.outcome = Outcome::Holds;
      v.certificate = json{{"property", p.to_json()}, {"eta", radius}, {"bounds", bounds}};
      return v;
    }
  }
  throw Error("unknown property");
}

// --------------------------------------------------------- series transfer

namespace {

// Member N of the returned family is sum_{n=1}^{N} term(n, s).
SequenceFamily partial_sums(std::string name, const Domain& d, std::function<double(std::uint64_t, double)> term) {
  SequenceFamily fam;
  fam.name = std::move(name);
  fam.domain = d;
  fam.members_continuous = true;
  fam.at = [d, term](std::uint64_t N) {
    Metadata m;
    m.continuous = true;
    return FunctionOracle::closure(
        d,
        [term, N](double s) {
          double acc = 0.0;
          for (std::uint64_t n = 1; n <= N; ++n) acc += term(n, s);
          return acc;
        },
        m);
  };
  return fam;
}

std::vector<FunctionOracle> members_upto(const SequenceFamily& fam, std::uint64_t K) {
  std::vector<FunctionOracle> out;
  out.reserve(K + 1);
  out.push_back(fam(1));  // index 0 unused
  for (std::uint64_t n = 1; n <= K; ++n) out.push_back(fam(n));
  return out;
}

struct Check {
  Outcome outcome = Outcome::Holds;
  json report = json::object();
};

// sticky_cauchy on the family plus ContinuousAt of its limit candidate at every probe.
Check converges_to_continuous(const SequenceFamily& fam, std::uint64_t candidate_index,
                              const ResolutionSchedule& sched) {
  Check c;
  const Verdict cauchy = convergence::sticky_cauchy(fam, sched, convergence::CauchyTail::Fixed);
  c.report["cauchy"] = to_string(cauchy.outcome);
  if (cauchy.fails()) c.report["cauchy_witness"] = cauchy.witness;
  const FunctionOracle candidate = fam(candidate_index);
  json cont = json::array();
  Outcome worst = cauchy.outcome;
  for (double t : probe_points(fam.domain, sched)) {
    const Verdict v = check_property(candidate, Property::continuous_at(t), sched);
    cont.push_back({t, to_string(v.outcome)});
    if (v.fails()) {
      worst = Outcome::Fails;
      c.report["continuity_witness"] = v.witness;
    } else if (!v.holds() && worst == Outcome::Holds) {
      worst = Outcome::Inconclusive;
    }
  }
  c.report["limit_continuity"] = cont;
  c.outcome = worst;
  return c;
}

Verdict finish(Outcome o, json hypotheses, json conclusion, json witness, const ResolutionSchedule& sched) {
  Verdict v;
  v.schedule = sched;
  v.outcome = o;
  v.certificate = json{{"hypotheses", std::move(hypotheses)}, {"conclusion", std::move(conclusion)}};
  if (o == Outcome::Fails) v.witness = std::move(witness);
  return v;
}

Outcome combine(Outcome a, Outcome b) {
  if (a == Outcome::Fails || b == Outcome::Fails) return Outcome::Fails;
  if (a == Outcome::Inconclusive || b == Outcome::Inconclusive) return Outcome::Inconclusive;
  return Outcome::Holds;
}

}  // namespace

Verdict series_transfer(const SequenceFamily& fam, const SeriesMode& mode, const ResolutionSchedule& sched) {
  sched.validate();
  const std::uint64_t K = 4 * sched.m_max;
  const Domain& d = fam.domain;
  json hyp = json::object();

  if (mode.kind == SeriesMode::Kind::NormalConvergence) {
    const auto f = std::make_shared<std::vector<FunctionOracle>>(members_upto(fam, K));
    const SequenceFamily abs_sums =
        partial_sums(fam.name + "-abs-sums", d, [f](std::uint64_t n, double s) { return std::abs((*f)[n](s)); });
    const Check h = converges_to_continuous(abs_sums, K, sched);
    hyp["normal_convergence"] = h.report;
    if (h.outcome == Outcome::Fails)
      return finish(Outcome::Fails, hyp, nullptr,
                    json{{"violated", "sum |f_n| does not converge sticky to a continuous function"}, {"detail", h.report}},
                    sched);
    const SequenceFamily sums = partial_sums(fam.name + "-sums", d, [f](std::uint64_t n, double s) { return (*f)[n](s); });
    const Check c = converges_to_continuous(sums, K, sched);
    const Outcome o = combine(h.outcome, c.outcome);
    return finish(o, hyp, c.report, json{{"violated", "conclusion"}, {"detail", c.report}}, sched);
  }

  if (mode.kind == SeriesMode::Kind::Abel) {
    if (!mode.eps_fam) throw Error("Abel mode needs the weight family eps_n");
    const SequenceFamily& ef = *mode.eps_fam;
    if (!(ef.domain == d)) throw Error("domain mismatch between family and Abel weights");
    const auto f = std::make_shared<std::vector<FunctionOracle>>(members_upto(fam, K));
    const auto e = std::make_shared<std::vector<FunctionOracle>>(members_upto(ef, K + 1));
    // (1) partial sums locally bounded.
    json bounds = json::array();
    const double radius = sched.eta_ladder.front();
    for (double t : probe_points(d, sched)) {
      double sup = 0.0;
      for (const Interval& w : d.window(t, radius)) {
        const FunctionOracle* self[] = {&(*f)[1]};
        for (double s : window_samples(w, sched, self)) {
          double acc = 0.0;
          for (std::uint64_t n = 1; n <= K; ++n) {
            acc += (*f)[n](s);
            sup = std::max(sup, std::abs(acc));
          }
        }
      }
      if (!std::isfinite(sup))
        return finish(Outcome::Fails, hyp, nullptr,
                      json{{"violated", "partial sums of f_n are not locally bounded"}, {"t", t}}, sched);
      bounds.push_back({t, sup});
    }
    hyp["partial_sum_bounds"] = bounds;
    // (2) eps_n -> 0 pointwise.
    const Verdict pw = convergence::detect_pointwise(ef, FunctionOracle::zero(d), sched);
    hyp["weights_to_zero"] = to_string(pw.outcome);
    if (pw.fails())
      return finish(Outcome::Fails, hyp, nullptr, json{{"violated", "eps_n -> 0 pointwise"}, {"detail", pw.witness}},
                    sched);
    // (3) sum |eps_{n+1} - eps_n| converges sticky to a continuous function.
    const SequenceFamily var = partial_sums(ef.name + "-variation", d, [e](std::uint64_t n, double s) {
      return std::abs((*e)[n + 1](s) - (*e)[n](s));
    });
    const Check h = converges_to_continuous(var, K, sched);
    hyp["weight_variation"] = h.report;
    if (h.outcome == Outcome::Fails)
      return finish(Outcome::Fails, hyp, nullptr,
                    json{{"violated", "sum |eps_{n+1} - eps_n| does not converge sticky to a continuous function"},
                         {"detail", h.report}},
                    sched);
    const SequenceFamily weighted = partial_sums(fam.name + "-abel", d, [f, e](std::uint64_t n, double s) {
      return (*e)[n](s) * (*f)[n](s);
    });
    const Check c = converges_to_continuous(weighted, K, sched);
    const Outcome o = combine(combine(pw.outcome, h.outcome), c.outcome);
    return finish(o, hyp, c.report, json{{"violated", "conclusion"}, {"detail", c.report}}, sched);
  }

  // Domination: |g_p - g_q| <= K |f_p - f_q| for p, q > N.
  if (!mode.ref_fam) throw Error("Domination mode needs the reference family f_n");
  const SequenceFamily& ref = *mode.ref_fam;
  if (!(ref.domain == d)) throw Error("domain mismatch between family and reference");
  if (!(mode.K >= 0.0) || !std::isfinite(mode.K)) throw Error("Domination constant K must be finite and >= 0");
  const auto idx = sampled_indices(mode.N + 1, 2 * sched.n_max);
  std::vector<FunctionOracle> g, f;
  for (auto n : idx) {
    g.push_back(fam(n));
    f.push_back(ref(n));
  }
  for (double t : probe_points(d, sched)) {
    for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
      for (std::size_t j : {i + 1, idx.size() - 1}) {
        if (j <= i) continue;
        const double lhs = std::abs(g[i](t) - g[j](t));
        const double rhs = mode.K * std::abs(f[i](t) - f[j](t));
        if (lhs > rhs + 1e-12 * (1.0 + rhs))
          return finish(Outcome::Fails, hyp, nullptr,
                        json{{"violated", "|g_p - g_q| <= K |f_p - f_q|"}, {"t", t}, {"p", idx[i]}, {"q", idx[j]},
                             {"lhs", lhs}, {"rhs", rhs}},
                        sched);
      }
    }
  }
  hyp["domination"] = json{{"K", mode.K}, {"N", mode.N}};
  const Verdict rc = convergence::sticky_cauchy(ref, sched);
  hyp["reference_cauchy"] = to_string(rc.outcome);
  if (rc.fails())
    return finish(Outcome::Fails, hyp, nullptr,
                  json{{"violated", "reference family is not sticky Cauchy"}, {"detail", rc.witness}}, sched);
  const Verdict gc = convergence::sticky_cauchy(fam, sched);
  json concl{{"cauchy", to_string(gc.outcome)}};
  Outcome o = combine(rc.outcome, gc.outcome);
  if (gc.fails()) concl["cauchy_witness"] = gc.witness;
  const FunctionOracle candidate = fam(K);
  json cont = json::array();
  for (double t : probe_points(d, sched)) {
    const Verdict v = check_property(candidate, Property::continuous_at(t), sched);
    cont.push_back({t, to_string(v.outcome)});
    o = combine(o, v.outcome);
  }
  concl["limit_continuity"] = cont;
  return finish(o, hyp, concl, json{{"violated", "conclusion"}, {"detail", concl}}, sched);
}

}  // namespace stickylab::functionals
