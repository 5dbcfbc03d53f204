#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "stickylab/humps.hpp"

using namespace stickylab;
using namespace stickylab::humps;

namespace {

// (f * g)(t) = int_0^1 f(t - s) g(s) ds by Milne's rule between consecutive
// kinks of s -> f(t - s) g(s); exact for the piecewise-linear inputs used here.
double quad_convolution(const CirclePiecewisePoly& f, const CirclePiecewisePoly& g, double t) {
  std::vector<double> cuts = g.poly().breaks();
  for (double fb : f.poly().breaks()) {
    double s = t - fb;
    s -= std::floor(s);
    cuts.push_back(s);
  }
  cuts.push_back(0.0);
  cuts.push_back(1.0);
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    if (b - a < 1e-15) continue;
    auto h = [&](double s) { return f(t - s) * g(s); };
    // Interior nodes only, so one-sided values at the cuts do not matter.
    const double w = b - a;
    const double x1 = a + w / 4, x2 = a + w / 2, x3 = a + 3 * w / 4;
    total += w * (2 * h(x1) - h(x2) + 2 * h(x3)) / 3.0;  // open Newton-Cotes, exact for cubics
  }
  return total;
}

double dirichlet_direct(std::uint64_t n, double t) {
  double s = 1.0;
  for (std::uint64_t k = 1; k <= n; ++k) s += 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(k) * t);
  return s;
}

}  // namespace

TEST_CASE("constant convolved with a mean-zero kernel vanishes") {
  const CirclePiecewisePoly one(PiecewisePoly::constant(0.0, 1.0, 1.0));
  const auto r = convolve_circle(one, haar_kernel(8, 1.0));
  for (double t : {0.0, 0.1, 0.37, 0.5, 0.99}) CHECK(std::abs(r(t)) < 1e-14);
}

TEST_CASE("spike convolved with the Haar kernel") {
  const auto z = spike(4, 0.5);
  CHECK(z(0.5) == 4.0);
  CHECK(z(0.25) == 0.0);
  const auto k = haar_kernel(8, 1.0);
  const auto r = convolve_circle(z, k);
  CHECK(r(0.5) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.poly().max_degree() <= 2);
  const auto hull = r.support_hull();
  CHECK(hull.lo >= 0.25 - 1e-12);
  CHECK(hull.hi <= 0.875 + 1e-12);
  for (double t : {0.3, 0.41, 0.5, 0.62, 0.7, 0.8, 0.86})
    CHECK(r(t) == doctest::Approx(quad_convolution(z, k, t)).epsilon(1e-9));
}

TEST_CASE("lemma formula") {
  const auto a = lemma_check(4, 8, 1.0, 0.5);
  CHECK(a.measured_sup == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(a.predicted_sup == 1.0);
  CHECK(a.relative_error <= 1e-12);
  CHECK(std::abs(a.value_at_t0) == doctest::Approx(a.measured_sup));
  CHECK(a.hull_within);

  CHECK(lemma_check(4, 4, 1.0, 0.375).measured_sup == doctest::Approx(2.0));
  const auto c = lemma_check(10, 100, 2.0, 0.5);
  CHECK(c.measured_sup == doctest::Approx(1.0).epsilon(1e-12));
  const double q = quad_convolution(spike(10, 0.5), haar_kernel(100, 2.0), 0.5);
  CHECK(c.value_at_t0 == doctest::Approx(q).epsilon(1e-9));
  CHECK_THROWS_AS(lemma_check(8, 4, 1.0, 0.5), Error);  // needs n >= k
}

TEST_CASE("spike-sum experiment") {
  const auto p = SpikeSumParams::defaults(6);
  CHECK_NOTHROW(p.validate());
  std::vector<std::uint64_t> ns;
  for (std::uint64_t n = 4; n <= 1024; n *= 2) ns.push_back(n);
  const auto r = banach_steinhaus_experiment(p, ns);
  for (double v : r.value_at_zero) CHECK(v == 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    // beta_i alpha_n k_i^2 / (2 n) at n = k_i with alpha_n = n / log(n + 2).
    const double k = p.k[i];
    CHECK(r.value_at_ti[i] == doctest::Approx(p.beta[i] * k * k / (2.0 * std::log(k + 2.0))).epsilon(1e-12));
  }
  for (std::size_t i = 2; i < r.sup_at_ki.size(); ++i) CHECK(r.sup_at_ki[i] > r.sup_at_ki[i - 1]);
  // |alpha_n| / n -> 0, so the response at t_2 shrinks after its peak.
  const auto& row = r.probe_values.at(1);
  CHECK(std::abs(row.back()) < std::abs(row.at(2)));
}

TEST_CASE("Poisson sums") {
  const auto in = PoissonInput::builtin();
  double direct = 0.0;
  for (int n = 10000; n >= 1; --n) direct += 2.0 * poisson_xi(n);
  CHECK(poisson_sum(in, 1.0).sum == doctest::Approx(direct).epsilon(1e-12));
  const auto t = poisson_sum(in, 0.05);
  CHECK(std::abs(t.sum) <= 1e-6);
  CHECK(t.tail_bound < 1e-12);

  const auto odd = PoissonInput::odd();
  for (double s : {0.05, 0.3, 1.0}) CHECK(std::abs(poisson_sum(odd, s).sum) <= 1e-15);
}

TEST_CASE("Dirichlet kernel L1 norms") {
  CHECK(dirichlet_l1(0) == doctest::Approx(1.0));
  CHECK(dirichlet_kernel(5, 0.13) == doctest::Approx(dirichlet_direct(5, 0.13)));
  // Midpoint rule oracle on 2^20 cells.
  const int m = 1 << 20;
  double q = 0.0;
  for (int i = 0; i < m; ++i) q += std::abs(dirichlet_direct(8, (i + 0.5) / m));
  CHECK(dirichlet_l1(8) == doctest::Approx(q / m).epsilon(1e-6));
  CHECK(dirichlet_l1(64) > dirichlet_l1(8));

  std::vector<std::uint64_t> ns;
  for (std::uint64_t n = 16; n <= 4096; n *= 2) ns.push_back(n);
  const auto prof = dirichlet_profile(ns);
  const double lebesgue = 4.0 / (std::numbers::pi * std::numbers::pi);
  CHECK(std::abs(prof.fitted_slope - lebesgue) <= 0.15 * lebesgue);
}
