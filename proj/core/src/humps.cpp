#include "stickylab/humps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "stickylab/catalog.hpp"
#include "stickylab/convergence.hpp"
#include "stickylab/functionals.hpp"
#include "stickylab/parallel.hpp"

namespace stickylab::humps {

namespace {

constexpr double kSnap = 1e-15;

struct Segment {
  double start;
  double end;
  Polynomial poly;  // local coordinate x = t - start
};

// Sums segments given on the real line into a function on R/Z.
CirclePiecewisePoly assemble(const std::vector<Segment>& segments) {
  std::vector<Segment> wrapped;
  wrapped.reserve(segments.size() + 8);
  for (const Segment& seg : segments) {
    if (seg.poly.is_zero() || !(seg.end > seg.start)) continue;
    double s = seg.start - std::floor(seg.start);
    double e = s + (seg.end - seg.start);
    Polynomial p = seg.poly;
    while (e > 1.0 + kSnap) {
      wrapped.push_back({s, 1.0, p});
      p = p.shifted(1.0 - s);
      e -= 1.0;
      s = 0.0;
    }
    wrapped.push_back({s, std::min(e, 1.0), p});
  }
  std::vector<double> breaks{0.0, 1.0};
  for (const Segment& seg : wrapped) {
    breaks.push_back(seg.start);
    breaks.push_back(seg.end);
  }
  std::sort(breaks.begin(), breaks.end());
  std::vector<double> uniq;
  for (double b : breaks)
    if (uniq.empty() || b - uniq.back() > kSnap) uniq.push_back(b);
  if (uniq.back() != 1.0) {
    if (1.0 - uniq.back() <= kSnap) uniq.back() = 1.0;
    else uniq.push_back(1.0);
  }
  if (uniq.size() > kMaxConvolutionBreakpoints) {
    std::ostringstream os;
    os << "breakpoint overflow: " << uniq.size() << " > " << kMaxConvolutionBreakpoints;
    throw Error(os.str());
  }
  auto snap = [&](double v) -> std::size_t {
    auto it = std::lower_bound(uniq.begin(), uniq.end(), v - kSnap);
    return static_cast<std::size_t>(it - uniq.begin());
  };
  std::vector<Polynomial> arcs(uniq.size() - 1);
  for (const Segment& seg : wrapped) {
    const std::size_t first = snap(seg.start);
    const std::size_t last = snap(seg.end);
    for (std::size_t a = first; a < last && a < arcs.size(); ++a) arcs[a] += seg.poly.shifted(uniq[a] - seg.start);
  }
  return CirclePiecewisePoly(PiecewisePoly(std::move(uniq), std::move(arcs)));
}

double binomial(std::size_t n, std::size_t k) {
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

// Convolution on R of P on [0, L) with Q on [0, M), as polynomials in tau on
// [0, min], [min, max], [max, L + M] (local coordinates).
std::vector<Segment> convolve_pieces(const Polynomial& P, double L, const Polynomial& Q, double M) {
  const auto& pc = P.coeffs();
  // R[e] = antiderivative of v^e Q(v).
  std::vector<Polynomial> R(pc.size());
  for (std::size_t e = 0; e < pc.size(); ++e) R[e] = (Polynomial::monomial(e) * Q).antiderivative();

  // h(tau) = sum_a p_a sum_c C(a,c) tau^c (-1)^{a-c} [R_{a-c}(up) - R_{a-c}(low)]
  auto regime = [&](double low_a, double low_b, double up_a, double up_b) {
    Polynomial h;
    for (std::size_t a = 0; a < pc.size(); ++a) {
      if (pc[a] == 0.0) continue;
      for (std::size_t c = 0; c <= a; ++c) {
        const std::size_t e = a - c;
        const double sign = (e % 2 == 0) ? 1.0 : -1.0;
        Polynomial bracket = R[e].compose_affine(up_a, up_b) - R[e].compose_affine(low_a, low_b);
        h += Polynomial::monomial(c) * bracket * (pc[a] * binomial(a, c) * sign);
      }
    }
    return h;
  };
  const double lo = std::min(L, M);
  const double hi = std::max(L, M);
  std::vector<Segment> out;
  // low = 0, up = tau
  out.push_back({0.0, lo, regime(0.0, 0.0, 0.0, 1.0)});
  if (hi > lo) {
    Polynomial mid = L <= M ? regime(-L, 1.0, 0.0, 1.0) : regime(0.0, 0.0, M, 0.0);
    out.push_back({lo, hi, mid.shifted(lo)});
  }
  // low = tau - L, up = M
  out.push_back({hi, L + M, regime(-L, 1.0, M, 0.0).shifted(hi)});
  return out;
}

}  // namespace

// ------------------------------------------------------- CirclePiecewisePoly

CirclePiecewisePoly::CirclePiecewisePoly() : poly_({0.0, 1.0}, {Polynomial{}}) {}

CirclePiecewisePoly::CirclePiecewisePoly(PiecewisePoly p) : poly_(std::move(p)) {
  const auto& b = poly_.breaks();
  if (b.empty()) {
    poly_ = PiecewisePoly({0.0, 1.0}, {Polynomial{}});
    return;
  }
  if (b.front() != 0.0 || b.back() != 1.0) throw Error("circle piecewise polynomial must cover [0, 1)");
}

double CirclePiecewisePoly::operator()(double t) const { return poly_(t - std::floor(t)); }

Extremum CirclePiecewisePoly::sup_norm() const { return poly_.sup_abs(Interval::right_open(0.0, 1.0)); }

Interval CirclePiecewisePoly::support_hull() const {
  const auto& b = poly_.breaks();
  const auto& p = poly_.pieces();
  std::vector<bool> nz(p.size());
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) any |= (nz[i] = !p[i].is_zero());
  if (!any) return Interval::open(0.0, 0.0);
  // Largest run of zero arcs (cyclically) defines the complement of the hull.
  const std::size_t m = p.size();
  std::size_t best_len = 0, best_start = 0;
  double best_width = -1.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (nz[i] || nz[(i + m - 1) % m] == false) continue;  // start of a zero run
    std::size_t j = i;
    double width = 0.0;
    std::size_t len = 0;
    while (!nz[j] && len < m) {
      width += b[j + 1] - b[j];
      j = (j + 1) % m;
      ++len;
    }
    if (width > best_width) {
      best_width = width;
      best_len = len;
      best_start = i;
    }
  }
  if (best_width < 0.0) return Interval::closed(0.0, 1.0);
  const double gap_start = b[best_start];
  const std::size_t gap_end_idx = (best_start + best_len) % m;
  double lo = b[gap_end_idx];
  double hi = gap_start;
  if (hi <= lo) lo -= 1.0;
  return Interval::closed(lo, hi);
}

FunctionOracle CirclePiecewisePoly::oracle() const {
  Metadata m;
  m.continuous = std::nullopt;
  return FunctionOracle::piecewise(Domain::circle(), poly_, m);
}

CirclePiecewisePoly spike(double k, double t0, double scale) {
  const double w = 1.0 / k;
  const double h = k * scale;
  std::vector<Segment> segs{{t0 - w, t0, Polynomial({0.0, h / w})}, {t0, t0 + w, Polynomial({h, -h / w})}};
  return assemble(segs);
}

CirclePiecewisePoly haar_kernel(double n, double alpha) {
  const double v = 2.0 * alpha * n;
  const double half = 0.5 / n;
  return assemble({{0.0, half, Polynomial::constant(v)}, {half, 2.0 * half, Polynomial::constant(-v)}});
}

CirclePiecewisePoly sum(const std::vector<CirclePiecewisePoly>& terms) {
  std::vector<Segment> segs;
  for (const auto& f : terms) {
    const auto& b = f.poly().breaks();
    for (std::size_t i = 0; i < f.poly().pieces().size(); ++i) segs.push_back({b[i], b[i + 1], f.poly().pieces()[i]});
  }
  return assemble(segs);
}

CirclePiecewisePoly convolve_circle(const CirclePiecewisePoly& f, const CirclePiecewisePoly& g) {
  if (f.breakpoint_count() + g.breakpoint_count() > kMaxConvolutionBreakpoints) {
    std::ostringstream os;
    os << "breakpoint overflow: " << f.breakpoint_count() + g.breakpoint_count() << " > "
       << kMaxConvolutionBreakpoints;
    throw Error(os.str());
  }
  const auto& fb = f.poly().breaks();
  const auto& gb = g.poly().breaks();
  const auto& fp = f.poly().pieces();
  const auto& gp = g.poly().pieces();
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < fp.size(); ++i) {
    if (fp[i].is_zero()) continue;
    for (std::size_t j = 0; j < gp.size(); ++j) {
      if (gp[j].is_zero()) continue;
      const double origin = fb[i] + gb[j];
      for (Segment s : convolve_pieces(fp[i], fb[i + 1] - fb[i], gp[j], gb[j + 1] - gb[j])) {
        s.start += origin;
        s.end += origin;
        segs.push_back(std::move(s));
      }
    }
  }
  return assemble(segs);
}

// --------------------------------------------------------------------- Lemma

json LemmaReport::to_json() const {
  return json{{"k", k},
              {"n", n},
              {"alpha", alpha},
              {"t0", t0},
              {"measured_sup", measured_sup},
              {"predicted_sup", predicted_sup},
              {"argmax", argmax},
              {"value_at_t0", value_at_t0},
              {"relative_error", relative_error},
              {"support_hull", {hull.lo, hull.hi}},
              {"predicted_hull", {predicted_hull.lo, predicted_hull.hi}},
              {"hull_within", hull_within}};
}

LemmaReport lemma_check(std::uint64_t k, std::uint64_t n, double alpha, double t0) {
  if (!(k >= 4 && n >= k)) throw Error("lemma precondition violated: need n >= k >= 4");
  const double kk = static_cast<double>(k);
  const double nn = static_cast<double>(n);
  if (!(t0 - 1.0 / kk > 0.0 && t0 + 1.0 / kk + 1.0 / nn < 1.0))
    throw Error("lemma precondition violated: spike support [t0 - 1/k, t0 + 1/k + 1/n] must lie inside (0, 1)");
  const CirclePiecewisePoly conv = convolve_circle(spike(kk, t0), haar_kernel(nn, alpha));
  LemmaReport r;
  r.k = kk;
  r.n = nn;
  r.alpha = alpha;
  r.t0 = t0;
  const Extremum e = conv.sup_norm();
  r.measured_sup = e.value;
  r.argmax = e.arg;
  r.value_at_t0 = conv(t0);
  r.predicted_sup = kk * kk * std::abs(alpha) / (2.0 * nn);
  r.relative_error = std::abs(r.measured_sup - r.predicted_sup) / r.predicted_sup;
  r.hull = conv.support_hull();
  r.predicted_hull = Interval::closed(t0 - 1.0 / kk, t0 + 1.0 / kk + 1.0 / nn);
  r.hull_within = r.hull.within(r.predicted_hull);
  return r;
}

// ---------------------------------------------------------------- spike sum

SpikeSumParams SpikeSumParams::defaults(std::size_t i_max) {
  SpikeSumParams p;
  for (std::size_t i = 1; i <= i_max; ++i) {
    const double k = std::ldexp(1.0, static_cast<int>(i) + 2);
    p.t.push_back(std::ldexp(1.0, -static_cast<int>(i)));
    p.k.push_back(k);
    p.beta.push_back(1.0 / (static_cast<double>(i) * k));
  }
  p.alpha_rule = "n/log(n+2)";
  p.alpha = [](double n) { return n / std::log(n + 2.0); };
  return p;
}

void SpikeSumParams::validate() const {
  if (t.empty() || t.size() != k.size() || t.size() != beta.size())
    throw Error("spike sum needs equally many t_i, k_i and beta_i (at least one)");
  if (!alpha) throw Error("spike sum needs an alpha_n schedule");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(k[i] >= 4.0)) throw Error("spike sum violates k_i >= 4");
    if (!(t[i] - 1.0 / k[i] > 0.0 && t[i] + 1.0 / k[i] < 1.0))
      throw Error("spike sum violates 0 < t_i - 1/k_i < t_i + 1/k_i < 1");
    if (i > 0) {
      if (!(t[i] < t[i - 1])) throw Error("spike sum violates t_i strictly decreasing");
      if (!(t[i] + 1.0 / k[i] < t[i - 1] - 1.0 / k[i - 1]))
        throw Error("overlapping spike supports: t_i + 1/k_i < t_{i-1} - 1/k_{i-1} fails");
      if (!(std::abs(beta[i] * k[i]) < std::abs(beta[i - 1] * k[i - 1])))
        throw Error("spike sum violates beta_i k_i decreasing to 0");
    }
  }
}

json SpikeSumParams::to_json() const {
  return json{{"t", t}, {"k", k}, {"beta", beta}, {"alpha_rule", alpha_rule}};
}

CirclePiecewisePoly spike_sum(const SpikeSumParams& p) {
  p.validate();
  std::vector<CirclePiecewisePoly> terms;
  for (std::size_t i = 0; i < p.size(); ++i) terms.push_back(spike(p.k[i], p.t[i], p.beta[i]));
  return sum(terms);
}

CirclePiecewisePoly spike_sum_response(const SpikeSumParams& p, const CirclePiecewisePoly& f, std::uint64_t n) {
  const double nn = static_cast<double>(n);
  return convolve_circle(f, haar_kernel(nn, p.alpha(nn)));
}

json BanachSteinhausReport::to_json() const {
  return json{{"params", params.to_json()},
              {"n_list", n_list},
              {"value_at_zero", value_at_zero},
              {"sup_norm", sup_norm},
              {"probes", probes},
              {"probe_values", probe_values},
              {"sup_at_ki", sup_at_ki},
              {"value_at_ti", value_at_ti},
              {"predicted_at_ti", predicted_at_ti}};
}

BanachSteinhausReport banach_steinhaus_experiment(std::size_t i_max, const std::vector<std::uint64_t>& n_list) {
  return banach_steinhaus_experiment(SpikeSumParams::defaults(i_max), n_list);
}

BanachSteinhausReport banach_steinhaus_experiment(const SpikeSumParams& params,
                                                  const std::vector<std::uint64_t>& n_list) {
  const CirclePiecewisePoly f = spike_sum(params);
  BanachSteinhausReport r;
  r.params = params;
  r.n_list = n_list;
  for (std::size_t i = 0; i < std::min<std::size_t>(4, params.size()); ++i) r.probes.push_back(params.t[i]);
  r.value_at_zero.resize(n_list.size());
  r.sup_norm.resize(n_list.size());
  r.probe_values.assign(r.probes.size(), std::vector<double>(n_list.size()));
  parallel_for(n_list.size(), [&](std::size_t j) {
    const CirclePiecewisePoly resp = spike_sum_response(params, f, n_list[j]);
    r.value_at_zero[j] = resp(0.0);
    r.sup_norm[j] = resp.sup_norm().value;
    for (std::size_t p = 0; p < r.probes.size(); ++p) r.probe_values[p][j] = resp(r.probes[p]);
  });
  r.sup_at_ki.resize(params.size());
  r.value_at_ti.resize(params.size());
  r.predicted_at_ti.resize(params.size());
  parallel_for(params.size(), [&](std::size_t i) {
    const auto n = static_cast<std::uint64_t>(params.k[i]);
    const CirclePiecewisePoly resp = spike_sum_response(params, f, n);
    const double nn = static_cast<double>(n);
    r.sup_at_ki[i] = resp.sup_norm().value;
    r.value_at_ti[i] = resp(params.t[i]);
    r.predicted_at_ti[i] = params.beta[i] * params.alpha(nn) * params.k[i] * params.k[i] / (2.0 * nn);
  });
  return r;
}

// ------------------------------------------------------------------ Poisson

double poisson_xi(double x) {
  const double x2 = x * x;
  return (3.0 * x2 - 2.0 * x2 * x2) * std::exp(-x2);
}

double odd_xi(double x) { return x * std::exp(-x * x); }

// |3x^2 - 2x^4| e^{-x^2/2} <= 2 for |x| >= 3.
PoissonInput PoissonInput::builtin() { return {poisson_xi, 2.0, 3.0, "(3x^2-2x^4)exp(-x^2)"}; }

// x e^{-x^2/2} <= 1 everywhere.
PoissonInput PoissonInput::odd() { return {odd_xi, 1.0, 1.0, "x exp(-x^2)"}; }

namespace {

constexpr double kTailTarget = 1e-12;

// Bound on sum_{|n| > N} |xi(s n)|, valid once s N >= envelope_from.
double envelope_tail(const PoissonInput& in, double s, std::uint64_t N) {
  const double x = s * static_cast<double>(N);
  return 2.0 * in.envelope_scale / s * std::sqrt(std::numbers::pi / 2.0) * std::erfc(x / std::sqrt(2.0));
}

}  // namespace

std::uint64_t poisson_cutoff(const PoissonInput& in, double s, double* tail_bound) {
  if (!(s > 0.0)) throw Error("poisson sum needs s > 0");
  auto N = static_cast<std::uint64_t>(std::ceil(in.envelope_from / s));
  N = std::max<std::uint64_t>(N, 1);
  // Doubling then bisection on the monotone bound.
  std::uint64_t hi = N;
  while (envelope_tail(in, s, hi) >= kTailTarget) hi *= 2;
  std::uint64_t lo = N;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (envelope_tail(in, s, mid) < kTailTarget) hi = mid;
    else lo = mid + 1;
  }
  if (tail_bound) *tail_bound = envelope_tail(in, s, lo);
  return lo;
}

PoissonTerm poisson_sum(const PoissonInput& in, double s) {
  PoissonTerm t;
  t.s = s;
  t.terms = poisson_cutoff(in, s, &t.tail_bound);
  // Pair +n and -n and add smallest terms first.
  double acc = 0.0;
  for (std::uint64_t n = t.terms; n >= 1; --n) {
    const double x = s * static_cast<double>(n);
    acc += in.xi(x) + in.xi(-x);
  }
  t.sum = acc + in.xi(0.0);
  return t;
}

json PoissonReport::to_json() const {
  json rows = json::array();
  for (const auto& t : terms)
    rows.push_back(json{{"s", t.s}, {"terms", t.terms}, {"sum", t.sum}, {"tail_bound", t.tail_bound}});
  return json{{"xi", xi_name},
              {"xi_at_zero", xi_at_zero},
              {"xi_integral", xi_integral},
              {"terms", rows},
              {"decreasing_to_zero", decreasing_to_zero},
              {"sticky", sticky.to_json()},
              {"limit_continuous_at_zero", continuity.to_json()}};
}

namespace {

// Composite Simpson over [-L, L] where the envelope tail is negligible.
double xi_integral(const PoissonInput& in) {
  const double L = std::max(in.envelope_from, 12.0);
  const int m = 24000;
  const double h = 2.0 * L / m;
  double acc = in.xi(-L) + in.xi(L);
  for (int i = 1; i < m; ++i) acc += (i % 2 ? 4.0 : 2.0) * in.xi(-L + i * h);
  return acc * h / 3.0;
}

}  // namespace

PoissonReport poisson_limit(const PoissonInput& in, const std::vector<double>& s_list,
                            const ResolutionSchedule& sched, bool run_detectors) {
  if (!in.xi) throw Error("poisson input needs a function xi");
  PoissonReport r;
  r.xi_name = in.name;
  r.xi_at_zero = in.xi(0.0);
  if (std::abs(r.xi_at_zero) > 1e-8) throw Error("hypothesis xi(0) = 0 violated");
  r.xi_integral = xi_integral(in);
  if (std::abs(r.xi_integral) > 1e-8) throw Error("hypothesis integral of xi = 0 violated");
  std::vector<double> s_sorted = s_list;
  std::sort(s_sorted.begin(), s_sorted.end(), std::greater<>());
  r.terms.resize(s_sorted.size());
  parallel_for(s_sorted.size(), [&](std::size_t i) { r.terms[i] = poisson_sum(in, s_sorted[i]); });
  r.decreasing_to_zero = !r.terms.empty() && std::abs(r.terms.back().sum) <= 1e-6;
  for (std::size_t i = 1; i < r.terms.size(); ++i)
    if (std::abs(r.terms[i].sum) > std::abs(r.terms[i - 1].sum) + kTailTarget) r.decreasing_to_zero = false;
  if (run_detectors) {
    const SequenceFamily fam = catalog::poisson_family(in);
    const FunctionOracle& limit = *fam.label.pointwise_limit;
    r.sticky = convergence::detect_sticky(fam, limit, sched);
    r.continuity = functionals::check_property(limit, functionals::Property::continuous_at(0.0), sched);
  }
  return r;
}

// ---------------------------------------------------------------- Dirichlet

double dirichlet_kernel(std::uint64_t n, double t) {
  const double m = 2.0 * static_cast<double>(n) + 1.0;
  const double den = std::sin(std::numbers::pi * t);
  if (std::abs(den) < 1e-15) {
    // Removable singularity at integers: limit is m (sign (-1)^{2n} = 1).
    return m;
  }
  return std::sin(m * std::numbers::pi * t) / den;
}

namespace {

template <class F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm, double fb, double whole, double tol,
                        int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

}  // namespace

double dirichlet_l1(std::uint64_t n) {
  if (n == 0) return 1.0;
  const double m = 2.0 * static_cast<double>(n) + 1.0;
  auto f = [n](double t) { return std::abs(dirichlet_kernel(n, t)); };
  // |D_n| is symmetric about 1/2; zeros at j/m.
  const auto zeros = static_cast<std::uint64_t>(n);  // zeros j/m in (0, 1/2) for j = 1..n
  double acc = 0.0;
  double a = 0.0;
  for (std::uint64_t j = 1; j <= zeros + 1; ++j) {
    const double b = j <= zeros ? static_cast<double>(j) / m : 0.5;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    acc += adaptive_simpson(f, a, b, fa, fm, fb, whole, 1e-13, 40);
    a = b;
  }
  return 2.0 * acc;
}

json DirichletReport::to_json() const {
  return json{{"n", n_list}, {"l1", l1}, {"fitted_slope", fitted_slope}};
}

DirichletReport dirichlet_profile(const std::vector<std::uint64_t>& n_list) {
  DirichletReport r;
  r.n_list = n_list;
  r.l1.resize(n_list.size());
  for (auto n : n_list)
    if (n > 4096) throw Error("dirichlet profile supports n <= 4096");
  parallel_for(n_list.size(), [&](std::size_t i) { r.l1[i] = dirichlet_l1(n_list[i]); });
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t cnt = 0;
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 16 || n_list[i] > 4096) continue;
    const double x = std::log(static_cast<double>(n_list[i]));
    sx += x;
    sy += r.l1[i];
    sxx += x * x;
    sxy += x * r.l1[i];
    ++cnt;
  }
  const double den = static_cast<double>(cnt) * sxx - sx * sx;
  if (cnt >= 2 && den > 0.0) r.fitted_slope = (static_cast<double>(cnt) * sxy - sx * sy) / den;
  return r;
}

}  // namespace stickylab::humps
