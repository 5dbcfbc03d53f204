#include "stickylab/funcspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace stickylab {

// ---------------------------------------------------------------- Interval

bool Interval::empty() const {
  if (lo > hi) return true;
  if (lo == hi) return lo_open || hi_open;
  return false;
}

bool Interval::contains(double t) const {
  if (t < lo || t > hi) return false;
  if (t == lo && lo_open) return false;
  if (t == hi && hi_open) return false;
  return true;
}

Interval Interval::intersect(const Interval& o) const {
  Interval r;
  if (lo > o.lo) {
    r.lo = lo;
    r.lo_open = lo_open;
  } else if (lo < o.lo) {
    r.lo = o.lo;
    r.lo_open = o.lo_open;
  } else {
    r.lo = lo;
    r.lo_open = lo_open || o.lo_open;
  }
  if (hi < o.hi) {
    r.hi = hi;
    r.hi_open = hi_open;
  } else if (hi > o.hi) {
    r.hi = o.hi;
    r.hi_open = o.hi_open;
  } else {
    r.hi = hi;
    r.hi_open = hi_open || o.hi_open;
  }
  return r;
}

bool Interval::within(const Interval& o) const {
  if (empty()) return true;
  if (lo < o.lo || (lo == o.lo && o.lo_open && !lo_open)) return false;
  if (hi > o.hi || (hi == o.hi && o.hi_open && !hi_open)) return false;
  return true;
}

// ------------------------------------------------------------------ Domain

bool Domain::contains(double t) const { return span.contains(t); }

double Domain::wrap(double t) const {
  if (!periodic) return t;
  double r = t - std::floor(t);
  return r >= 1.0 ? 0.0 : r;
}

std::vector<Interval> Domain::window(double t, double radius) const {
  if (!periodic) {
    Interval w = Interval::open(t - radius, t + radius).intersect(span);
    if (w.empty()) return {};
    return {w};
  }
  if (radius >= 0.5) return {span};
  t = wrap(t);
  const double a = t - radius;
  const double b = t + radius;
  if (a < 0.0) return {Interval::right_open(0.0, b), Interval::open(1.0 + a, 1.0)};
  if (b > 1.0) return {Interval::right_open(0.0, b - 1.0), Interval::open(a, 1.0)};
  return {Interval::open(a, b)};
}

bool Domain::operator==(const Domain& o) const {
  return periodic == o.periodic && span.lo == o.span.lo && span.hi == o.span.hi &&
         span.lo_open == o.span.lo_open && span.hi_open == o.span.hi_open;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(std::size_t degree, double c) {
  std::vector<double> v(degree + 1, 0.0);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<double>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
  if (coeffs_.empty()) return {};
  std::vector<double> a(coeffs_.size() + 1, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) a[i + 1] = coeffs_[i] / static_cast<double>(i + 1);
  return Polynomial(std::move(a));
}

Polynomial Polynomial::compose_affine(double a, double b) const {
  // Horner in polynomial arithmetic: p(a + b x).
  Polynomial lin({a, b});
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * lin;
    acc += Polynomial::constant(*it);
  }
  return acc;
}

double Polynomial::integral(double lo, double hi) const {
  Polynomial a = antiderivative();
  return a(hi) - a(lo);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<double> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(r));
}

std::vector<double> Polynomial::roots_in(double lo, double hi) const {
  std::vector<double> out;
  if (coeffs_.size() <= 1 || lo > hi) return out;
  if (coeffs_.size() == 2) {
    const double r = -coeffs_[0] / coeffs_[1];
    if (r >= lo && r <= hi) out.push_back(r);
    return out;
  }
  // Split [lo, hi] at the critical points; p is monotone on each segment.
  std::vector<double> cuts{lo};
  for (double c : derivative().roots_in(lo, hi))
    if (c > cuts.back()) cuts.push_back(c);
  if (hi > cuts.back()) cuts.push_back(hi);
  const Polynomial& p = *this;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double a = cuts[i];
    double b = cuts[i + 1];
    double fa = p(a);
    double fb = p(b);
    if (fa == 0.0) {
      if (out.empty() || out.back() != a) out.push_back(a);
      continue;
    }
    if (fb == 0.0 || (fa < 0.0) == (fb < 0.0)) continue;
    for (int it = 0; it < 200 && b - a > 0.0; ++it) {
      const double m = 0.5 * (a + b);
      if (m <= a || m >= b) break;
      const double fm = p(m);
      if ((fm < 0.0) == (fa < 0.0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
      }
    }
    out.push_back(0.5 * (a + b));
  }
  if (p(hi) == 0.0 && (out.empty() || out.back() != hi)) out.push_back(hi);
  return out;
}

// ------------------------------------------------------------ PiecewisePoly

PiecewisePoly::PiecewisePoly(std::vector<double> breaks, std::vector<Polynomial> pieces,
                             std::vector<PointValue> points)
    : breaks_(std::move(breaks)), pieces_(std::move(pieces)), points_(std::move(points)) {
  if (breaks_.empty() != pieces_.empty() || (!breaks_.empty() && breaks_.size() != pieces_.size() + 1))
    throw Error("piecewise polynomial needs one more breakpoint than pieces");
  for (std::size_t i = 1; i < breaks_.size(); ++i)
    if (!(breaks_[i] > breaks_[i - 1])) throw Error("piecewise polynomial breakpoints must be strictly increasing");
  std::sort(points_.begin(), points_.end(), [](auto& a, auto& b) { return a.t < b.t; });
}

PiecewisePoly PiecewisePoly::constant(double a, double b, double c) {
  return PiecewisePoly({a, b}, {Polynomial::constant(c)});
}

PiecewisePoly PiecewisePoly::linear_through(std::span<const std::pair<double, double>> nodes) {
  if (nodes.size() < 2) throw Error("linear interpolant needs at least two nodes");
  std::vector<double> br;
  std::vector<Polynomial> pc;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const auto [x0, y0] = nodes[i];
    const auto [x1, y1] = nodes[i + 1];
    br.push_back(x0);
    pc.push_back(Polynomial({y0, (y1 - y0) / (x1 - x0)}));
  }
  br.push_back(nodes.back().first);
  return PiecewisePoly(std::move(br), std::move(pc));
}

std::optional<std::size_t> PiecewisePoly::piece_at(double t) const {
  if (breaks_.empty() || t < breaks_.front() || t >= breaks_.back()) return std::nullopt;
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
  return static_cast<std::size_t>(it - breaks_.begin()) - 1;
}

double PiecewisePoly::operator()(double t) const {
  auto pt = std::lower_bound(points_.begin(), points_.end(), t, [](auto& p, double x) { return p.t < x; });
  if (pt != points_.end() && pt->t == t) return pt->value;
  return right_limit(t);
}

double PiecewisePoly::right_limit(double t) const {
  auto i = piece_at(t);
  if (!i) return 0.0;
  return pieces_[*i](t - breaks_[*i]);
}

double PiecewisePoly::left_limit(double t) const {
  if (breaks_.empty() || t <= breaks_.front() || t > breaks_.back()) return 0.0;
  auto it = std::lower_bound(breaks_.begin(), breaks_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - breaks_.begin()) - 1;
  return pieces_[i](t - breaks_[i]);
}

std::size_t PiecewisePoly::max_degree() const {
  std::size_t d = 0;
  for (auto& p : pieces_) d = std::max(d, p.degree());
  return d;
}

namespace {

Extremum max_abs_on(const Polynomial& p, double lo, double hi, double offset) {
  Extremum e{std::abs(p(lo)), lo + offset};
  auto consider = [&](double x) {
    const double v = std::abs(p(x));
    if (v > e.value) e = {v, x + offset};
  };
  consider(hi);
  for (double c : p.derivative().roots_in(lo, hi)) consider(c);
  return e;
}

}  // namespace

Extremum PiecewisePoly::sup_abs(const Interval& w) const {
  Extremum best{0.0, w.lo};
  if (w.empty()) throw Error("sup over an empty window");
  bool have = false;
  auto take = [&](double v, double arg) {
    if (!have || v > best.value) {
      best = {v, arg};
      have = true;
    }
  };
  // Zero outside the support of the pieces.
  if (breaks_.empty() || w.lo < breaks_.front())
    take(0.0, w.lo);
  else if (w.hi > breaks_.back() || (w.hi == breaks_.back() && !w.hi_open))
    take(0.0, w.hi);
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Interval cell = Interval::right_open(breaks_[i], breaks_[i + 1]);
    const Interval part = cell.intersect(w);
    if (part.empty()) continue;
    if (part.lo == part.hi) {
      take(std::abs((*this)(part.lo)), part.lo);
      continue;
    }
    const Extremum e = max_abs_on(pieces_[i], part.lo - breaks_[i], part.hi - breaks_[i], breaks_[i]);
    take(e.value, e.arg);
  }
  for (const auto& pv : points_)
    if (w.contains(pv.t)) take(std::abs(pv.value), pv.t);
  if (!have) take(0.0, w.lo);
  return best;
}

PiecewisePoly PiecewisePoly::combine(const PiecewisePoly& a, double wa, const PiecewisePoly& b, double wb) {
  std::vector<double> br;
  br.reserve(a.breaks_.size() + b.breaks_.size());
  std::merge(a.breaks_.begin(), a.breaks_.end(), b.breaks_.begin(), b.breaks_.end(), std::back_inserter(br));
  br.erase(std::unique(br.begin(), br.end()), br.end());
  std::vector<Polynomial> pc;
  pc.reserve(br.size());
  auto local = [](const PiecewisePoly& f, double start) -> Polynomial {
    auto i = f.piece_at(start);
    if (!i) return {};
    return f.pieces_[*i].shifted(start - f.breaks_[*i]);
  };
  for (std::size_t k = 0; k + 1 < br.size(); ++k) {
    Polynomial p = local(a, br[k]) * wa;
    p += local(b, br[k]) * wb;
    pc.push_back(std::move(p));
  }
  if (br.size() == 1) br.clear();
  std::vector<PointValue> pts;
  std::set<double> seen;
  for (auto* f : {&a, &b})
    for (auto& pv : f->points_)
      if (seen.insert(pv.t).second) pts.push_back({pv.t, wa * a(pv.t) + wb * b(pv.t)});
  return PiecewisePoly(std::move(br), std::move(pc), std::move(pts));
}

double PiecewisePoly::integral() const {
  double s = 0.0;
  for (std::size_t i = 0; i < pieces_.size(); ++i) s += pieces_[i].integral(0.0, breaks_[i + 1] - breaks_[i]);
  return s;
}

std::vector<double> PiecewisePoly::structural_points() const {
  std::vector<double> out = breaks_;
  for (auto& pv : points_) out.push_back(pv.t);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ----------------------------------------------------------- FunctionOracle

struct FunctionOracle::Impl {
  Domain domain;
  Structure structure;
  std::optional<PiecewisePoly> poly;
  std::function<double(double)> fn;
  SeriesInfo series;
  Metadata meta;
};

FunctionOracle FunctionOracle::piecewise(Domain domain, PiecewisePoly p, Metadata meta) {
  for (std::size_t i = 0; i < meta.humps.size(); ++i) {
    if (!meta.humps[i].within(domain.span)) throw Error("hump support outside the domain");
    for (std::size_t j = 0; j < i; ++j)
      if (!meta.humps[i].intersect(meta.humps[j]).empty()) throw Error("hump supports overlap");
  }
  return FunctionOracle(std::make_shared<const Impl>(
      Impl{domain, Structure::PiecewisePoly, std::move(p), {}, {}, std::move(meta)}));
}

FunctionOracle FunctionOracle::closure(Domain domain, std::function<double(double)> f, Metadata meta) {
  return FunctionOracle(
      std::make_shared<const Impl>(Impl{domain, Structure::Closure, std::nullopt, std::move(f), {}, std::move(meta)}));
}

FunctionOracle FunctionOracle::series(Domain domain, std::function<double(double)> f, SeriesInfo info,
                                      Metadata meta) {
  return FunctionOracle(
      std::make_shared<const Impl>(Impl{domain, Structure::Series, std::nullopt, std::move(f), info, std::move(meta)}));
}

FunctionOracle FunctionOracle::zero(Domain domain) {
  Metadata m;
  m.continuous = true;
  return piecewise(domain, PiecewisePoly::zero(), m);
}

double FunctionOracle::operator()(double t) const {
  const Impl& im = *impl_;
  if (im.domain.periodic) t = im.domain.wrap(t);
  if (im.poly) return (*im.poly)(t);
  return im.fn(t);
}

const Domain& FunctionOracle::domain() const { return impl_->domain; }
Structure FunctionOracle::structure() const { return impl_->structure; }
const PiecewisePoly* FunctionOracle::as_piecewise() const { return impl_->poly ? &*impl_->poly : nullptr; }
const Metadata& FunctionOracle::metadata() const { return impl_->meta; }
const SeriesInfo& FunctionOracle::series_info() const { return impl_->series; }

// ------------------------------------------------------------- labels, enums

std::string to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    default: return "unknown";
  }
}

bool GroundTruth::consistent() const {
  if (locally_uniform == Tri::Yes && sticky != Tri::Yes) return false;
  if (sticky == Tri::Yes && !pointwise_limit) return false;
  return true;
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "Holds";
    case Outcome::Fails: return "Fails";
    default: return "Inconclusive";
  }
}

Outcome outcome_from_string(const std::string& s) {
  if (s == "Holds") return Outcome::Holds;
  if (s == "Fails") return Outcome::Fails;
  if (s == "Inconclusive") return Outcome::Inconclusive;
  throw Error("unknown outcome '" + s + "'");
}

// --------------------------------------------------------- ResolutionSchedule

ResolutionSchedule ResolutionSchedule::defaults() {
  ResolutionSchedule s;
  for (int e = 0; e >= -6; --e) s.eps_ladder.push_back(std::pow(10.0, e));
  for (int k = 1; k <= 40; ++k) s.eta_ladder.push_back(std::ldexp(1.0, -k));
  return s;
}

void ResolutionSchedule::validate() const {
  auto check_ladder = [](const std::vector<double>& v, const char* name) {
    if (v.empty()) throw Error(std::string(name) + " must not be empty");
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!(v[i] > 0.0)) throw Error(std::string(name) + " entries must be positive");
      if (i > 0 && !(v[i] < v[i - 1])) throw Error(std::string(name) + " must be strictly decreasing");
    }
  };
  check_ladder(eps_ladder, "eps_ladder");
  check_ladder(eta_ladder, "eta_ladder");
  if (n_max < 2 || m_max < 2) throw Error("index caps must be >= 2");
  if (window_cap < 2 || base_grid < 1 || window_samples < 1 || probe_grid < 1)
    throw Error("grid sizes must be positive (window_cap >= 2)");
  if (!(horizon > 0.0)) throw Error("horizon must be positive");
}

json ResolutionSchedule::to_json() const {
  return json{{"eps_ladder", eps_ladder}, {"eta_ladder", eta_ladder}, {"base_grid", base_grid},
              {"n_max", n_max},           {"m_max", m_max},           {"window_cap", window_cap},
              {"horizon", horizon},       {"probe_grid", probe_grid}, {"window_samples", window_samples}};
}

ResolutionSchedule ResolutionSchedule::from_json(const json& j) {
  ResolutionSchedule s = defaults();
  if (j.contains("eps_ladder")) s.eps_ladder = j.at("eps_ladder").get<std::vector<double>>();
  if (j.contains("eta_ladder")) s.eta_ladder = j.at("eta_ladder").get<std::vector<double>>();
  if (j.contains("base_grid")) s.base_grid = j.at("base_grid").get<std::uint32_t>();
  if (j.contains("n_max")) s.n_max = j.at("n_max").get<std::uint64_t>();
  if (j.contains("m_max")) s.m_max = j.at("m_max").get<std::uint64_t>();
  if (j.contains("window_cap")) s.window_cap = j.at("window_cap").get<std::uint32_t>();
  if (j.contains("horizon")) s.horizon = j.at("horizon").get<double>();
  if (j.contains("probe_grid")) s.probe_grid = j.at("probe_grid").get<std::uint32_t>();
  if (j.contains("window_samples")) s.window_samples = j.at("window_samples").get<std::uint32_t>();
  s.validate();
  return s;
}

json Verdict::to_json() const {
  return json{{"outcome", to_string(outcome)},
              {"certificate", certificate},
              {"witness", witness},
              {"schedule", schedule.to_json()}};
}

// ----------------------------------------------------------------- sampling

std::vector<double> probe_points(const Domain& d, const ResolutionSchedule& s, std::span<const double> extra) {
  std::vector<double> pts;
  const double h = 1.0 / s.probe_grid;
  const double lo = d.span.lo;
  const double hi = std::min(d.span.hi, d.periodic ? d.span.hi : std::max(d.span.lo, s.horizon));
  for (double t = std::ceil(lo / h) * h; t <= hi; t += h)
    if (d.contains(t)) pts.push_back(t);
  for (double t : extra)
    if (d.contains(t) && t <= hi) pts.push_back(t);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::vector<std::uint64_t> sampled_indices(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (lo == 0) lo = 1;
  if (lo > 16 && lo <= hi) out.push_back(lo);
  for (std::uint64_t n = lo; n <= std::min<std::uint64_t>(hi, 16); ++n) out.push_back(n);
  for (int j = 0;; ++j) {
    const double v = 16.0 * std::exp2(j / 16.0);
    const auto n = static_cast<std::uint64_t>(std::llround(v));
    if (n > hi) break;
    if (n >= lo && (out.empty() || n > out.back())) out.push_back(n);
  }
  if (hi >= lo && (out.empty() || out.back() != hi)) out.push_back(hi);
  return out;
}

namespace {

void append_structure(const FunctionOracle& f, const Interval& w, std::vector<double>& pts) {
  if (const auto* p = f.as_piecewise())
    for (double b : p->structural_points())
      if (w.contains(b)) pts.push_back(b);
  for (double c : f.metadata().critical_points)
    if (w.contains(c)) pts.push_back(c);
  for (const auto& h : f.metadata().humps) {
    if (w.contains(h.lo)) pts.push_back(h.lo);
    if (w.contains(h.hi)) pts.push_back(h.hi);
  }
}

void check_window(const FunctionOracle& f, const Interval& w) {
  if (w.empty()) throw Error("empty window");
  if (!w.within(f.domain().span)) {
    std::ostringstream os;
    os << "window [" << w.lo << ", " << w.hi << "] lies outside the domain [" << f.domain().span.lo << ", "
       << f.domain().span.hi << "]";
    throw Error(os.str());
  }
}

}  // namespace

std::vector<std::pair<double, double>> eval_on_grid(const FunctionOracle& f, const Interval& w,
                                                    const ResolutionSchedule& sched) {
  check_window(f, w);
  std::vector<double> structural;
  append_structure(f, w, structural);
  std::sort(structural.begin(), structural.end());
  structural.erase(std::unique(structural.begin(), structural.end()), structural.end());
  if (structural.size() > sched.window_cap) {
    std::ostringstream os;
    os << "window_cap " << sched.window_cap << " is smaller than the " << structural.size()
       << " breakpoints in the window (overflow " << structural.size() - sched.window_cap << ")";
    throw Error(os.str());
  }
  double h = 1.0 / sched.base_grid;
  auto grid_count = [&](double step) {
    return static_cast<std::size_t>(std::floor(w.hi / step) - std::ceil(w.lo / step)) + 1;
  };
  while (grid_count(h) + structural.size() > sched.window_cap) h *= 2.0;
  std::vector<double> pts = structural;
  for (double k = std::ceil(w.lo / h); k * h <= w.hi; k += 1.0)
    if (w.contains(k * h)) pts.push_back(k * h);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<std::pair<double, double>> out;
  out.reserve(pts.size());
  for (double t : pts) out.emplace_back(t, f(t));
  return out;
}

std::vector<double> window_samples(const Interval& w, const ResolutionSchedule& sched,
                                   std::span<const FunctionOracle* const> oracles) {
  std::vector<double> pts;
  if (w.empty()) return pts;
  const std::uint32_t count = std::max<std::uint32_t>(2, std::min(2 * sched.window_samples, sched.window_cap));
  const double h = w.width() / count;
  if (!w.lo_open) pts.push_back(w.lo);
  for (std::uint32_t j = 1; j < count; ++j) pts.push_back(w.lo + j * h);
  if (!w.hi_open) pts.push_back(w.hi);
  std::vector<double> st;
  for (const FunctionOracle* f : oracles) append_structure(*f, w, st);
  if (!st.empty()) {
    // One interior sample per structural gap, so no piece narrower than the
    // grid spacing goes unseen.
    st.push_back(w.lo);
    st.push_back(w.hi);
    std::sort(st.begin(), st.end());
    st.erase(std::unique(st.begin(), st.end()), st.end());
    for (std::size_t i = 0; i + 1 < st.size(); ++i) {
      pts.push_back(st[i]);
      pts.push_back(0.5 * (st[i] + st[i + 1]));
    }
    std::erase_if(pts, [&](double x) { return !w.contains(x); });
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  // Keep the structural points; thin the rest if the cap is exceeded.
  while (pts.size() > sched.window_cap) {
    std::vector<double> thin;
    for (std::size_t i = 0; i < pts.size(); i += 2) thin.push_back(pts[i]);
    pts.swap(thin);
  }
  return pts;
}

std::vector<double> structural_points_in(const FunctionOracle& f, const Interval& w) {
  std::vector<double> pts;
  append_structure(f, w, pts);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

WindowSup sup_on_window(const FunctionOracle& f, const Interval& w, const ResolutionSchedule& sched) {
  check_window(f, w);
  if (const auto* p = f.as_piecewise()) {
    const Extremum e = p->sup_abs(w);
    return {e.value, e.arg, true};
  }
  WindowSup best{0.0, w.lo, false};
  bool have = false;
  auto take = [&](double t, double v) {
    v = std::abs(v);
    if (!have || v > best.value) {
      best.value = v;
      best.arg = t;
      have = true;
    }
  };
  for (auto [t, v] : eval_on_grid(f, w, sched)) take(t, v);
  const FunctionOracle* self[] = {&f};
  for (double t : window_samples(w, sched, self)) take(t, f(t));
  return best;
}

// --------------------------------------------------------------------- Gap

Gap::Gap(FunctionOracle f, FunctionOracle g) : f_(std::move(f)), g_(std::move(g)) {
  const auto* pf = f_.as_piecewise();
  const auto* pg = g_.as_piecewise();
  if (pf && pg) diff_ = PiecewisePoly::combine(*pf, 1.0, *pg, -1.0);
}

double Gap::operator()(double s) const { return std::abs(f_(s) - g_(s)); }

WindowSup Gap::sup(const Interval& w, const ResolutionSchedule& sched) const {
  if (diff_) {
    const Extremum e = diff_->sup_abs(w);
    return {e.value, e.arg, true};
  }
  WindowSup best{0.0, w.lo, false};
  bool have = false;
  const FunctionOracle* both[] = {&f_, &g_};
  for (double s : window_samples(w, sched, both)) {
    const double v = (*this)(s);
    if (!have || v > best.value) {
      best.value = v;
      best.arg = s;
      have = true;
    }
  }
  return best;
}

}  // namespace stickylab
