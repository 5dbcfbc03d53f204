#pragma once

// Exact piecewise-polynomial convolution on the circle R/Z and the gliding-hump
// experiments built on it.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stickylab/funcspace.hpp"

namespace stickylab::humps {

// A piecewise polynomial on [0, 1) read modulo 1. Breakpoints always start at 0
// and end at 1, so every arc is covered (zero arcs have an empty polynomial).
class CirclePiecewisePoly {
 public:
  CirclePiecewisePoly();
  explicit CirclePiecewisePoly(PiecewisePoly p);

  double operator()(double t) const;
  const PiecewisePoly& poly() const { return poly_; }
  std::size_t breakpoint_count() const { return poly_.breaks().size(); }

  Extremum sup_norm() const;
  double integral() const { return poly_.integral(); }
  // Smallest [a, b] (a may be negative, read modulo 1) outside which f vanishes.
  // Returns an empty interval for the zero function.
  Interval support_hull() const;
  FunctionOracle oracle() const;

 private:
  PiecewisePoly poly_;
};

// zeta_k^{t0}: 0 outside (t0 - 1/k, t0 + 1/k), value k at t0, affine on both sides.
CirclePiecewisePoly spike(double k, double t0, double scale = 1.0);
// alpha * n * eta(n t) with eta = 2 (1_[0,1/2) - 1_[1/2,1)).
CirclePiecewisePoly haar_kernel(double n, double alpha);
CirclePiecewisePoly sum(const std::vector<CirclePiecewisePoly>& terms);

inline constexpr std::size_t kMaxConvolutionBreakpoints = 100000;

// (f * g)(t) = int_0^1 f(t - s) g(s) ds, exact arc by arc.
CirclePiecewisePoly convolve_circle(const CirclePiecewisePoly& f, const CirclePiecewisePoly& g);

struct LemmaReport {
  double k = 0.0;
  double n = 0.0;
  double alpha = 0.0;
  double t0 = 0.0;
  double measured_sup = 0.0;
  double predicted_sup = 0.0;  // k^2 |alpha| / (2 n)
  double argmax = 0.0;
  double value_at_t0 = 0.0;
  double relative_error = 0.0;
  Interval hull;
  Interval predicted_hull;  // [t0 - 1/k, t0 + 1/k + 1/n]
  bool hull_within = false;

  json to_json() const;
};

LemmaReport lemma_check(std::uint64_t k, std::uint64_t n, double alpha, double t0);

// Spike-sum construction f = sum_i beta_i zeta_{k_i}^{t_i}, i = 1..i_max.
struct SpikeSumParams {
  std::vector<double> t;
  std::vector<double> k;
  std::vector<double> beta;
  std::string alpha_rule;                 // human-readable schedule name
  std::function<double(double)> alpha;    // n -> alpha_n

  static SpikeSumParams defaults(std::size_t i_max);
  std::size_t size() const { return t.size(); }
  // Disjoint, separated supports inside (0, 1); beta_i k_i decreasing to 0.
  void validate() const;
  json to_json() const;
};

CirclePiecewisePoly spike_sum(const SpikeSumParams& p);
// f * eta_n for the spike sum, alpha = alpha_n.
CirclePiecewisePoly spike_sum_response(const SpikeSumParams& p, const CirclePiecewisePoly& f, std::uint64_t n);

struct BanachSteinhausReport {
  SpikeSumParams params;
  std::vector<std::uint64_t> n_list;
  std::vector<double> value_at_zero;  // per n
  std::vector<double> sup_norm;       // per n
  std::vector<double> probes;         // t_1..t_min(4, i_max)
  std::vector<std::vector<double>> probe_values;  // [probe][n]
  // At n = k_i: measured sup norm, measured value at t_i and predicted beta_i alpha_n k_i^2/(2n).
  std::vector<double> sup_at_ki;
  std::vector<double> value_at_ti;
  std::vector<double> predicted_at_ti;

  json to_json() const;
};

BanachSteinhausReport banach_steinhaus_experiment(std::size_t i_max, const std::vector<std::uint64_t>& n_list);
BanachSteinhausReport banach_steinhaus_experiment(const SpikeSumParams& params,
                                                  const std::vector<std::uint64_t>& n_list);

// Built-in Schwartz function (3x^2 - 2x^4) e^{-x^2} and an odd companion x e^{-x^2}.
double poisson_xi(double x);
double odd_xi(double x);

struct PoissonInput {
  std::function<double(double)> xi;
  // |xi(x)| <= envelope_scale * exp(-x^2/2) for |x| >= envelope_from.
  double envelope_scale = 0.0;
  double envelope_from = 0.0;
  std::string name;

  static PoissonInput builtin();
  static PoissonInput odd();
};

struct PoissonTerm {
  double s = 0.0;
  std::uint64_t terms = 0;  // N(s)
  double sum = 0.0;         // S(s) = sum_{|n| <= N(s)} xi(s n)
  double tail_bound = 0.0;  // certified bound on the discarded tail
};

// Smallest N with certified tail below 1e-12.
std::uint64_t poisson_cutoff(const PoissonInput& in, double s, double* tail_bound = nullptr);
PoissonTerm poisson_sum(const PoissonInput& in, double s);

struct PoissonReport {
  std::string xi_name;
  double xi_at_zero = 0.0;
  double xi_integral = 0.0;
  std::vector<PoissonTerm> terms;
  bool decreasing_to_zero = false;
  Verdict sticky;       // psi_N family against psi_infinity
  Verdict continuity;   // psi_infinity continuous at 0
  json to_json() const;
};

// Checks the hypotheses (xi(0) = 0, integral 0 within 1e-8), sums S(s) for each s,
// and runs the sticky detector on psi_N. Throws Error naming a violated hypothesis.
PoissonReport poisson_limit(const PoissonInput& in, const std::vector<double>& s_list,
                            const ResolutionSchedule& sched, bool run_detectors = true);

double dirichlet_kernel(std::uint64_t n, double t);
// int_0^1 |D_n(t)| dt, adaptive quadrature between consecutive zeros.
double dirichlet_l1(std::uint64_t n);

struct DirichletReport {
  std::vector<std::uint64_t> n_list;
  std::vector<double> l1;
  double fitted_slope = 0.0;  // least squares of l1 against log n over n in [16, 4096]
  json to_json() const;
};

DirichletReport dirichlet_profile(const std::vector<std::uint64_t>& n_list);

}  // namespace stickylab::humps
