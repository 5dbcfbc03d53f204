#include <doctest.h>

#include <cmath>
#include <vector>

#include "stickylab/funcspace.hpp"

using namespace stickylab;

namespace {

PiecewisePoly spike4() {
  const std::vector<std::pair<double, double>> nodes{{0.0, 0.0}, {0.25, 0.0}, {0.5, 4.0}, {0.75, 0.0}, {1.0, 0.0}};
  return PiecewisePoly::linear_through(nodes);
}

PiecewisePoly haar() {
  return PiecewisePoly({0.0, 0.5, 1.0}, {Polynomial::constant(2.0), Polynomial::constant(-2.0)});
}

double value_at(const std::vector<std::pair<double, double>>& samples, double t) {
  for (const auto& [s, v] : samples)
    if (s == t) return v;
  FAIL("sample point missing");
  return NAN;
}

}  // namespace

TEST_CASE("polynomial arithmetic against hand expansions") {
  const Polynomial p({1.0, -3.0, 2.0});  // 2x^2 - 3x + 1 = (2x - 1)(x - 1)
  CHECK(p(2.0) == doctest::Approx(3.0));
  CHECK(p.derivative()(0.5) == doctest::Approx(-1.0));
  // int_0^1 (2x^2 - 3x + 1) dx = 2/3 - 3/2 + 1
  CHECK(p.integral(0.0, 1.0) == doctest::Approx(1.0 / 6.0));
  auto roots = p.roots_in(0.0, 2.0);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == doctest::Approx(0.5));
  CHECK(roots[1] == doctest::Approx(1.0));
  const Polynomial q = p.shifted(1.0);  // p(x + 1)
  CHECK(q(0.0) == doctest::Approx(p(1.0)));
  CHECK((p * p)(3.0) == doctest::Approx(p(3.0) * p(3.0)));
}

TEST_CASE("piecewise polynomials are right-continuous at breakpoints") {
  const auto h = haar();
  CHECK(h(0.0) == 2.0);
  CHECK(h(0.5) == -2.0);
  CHECK(h(1.0) == 0.0);
  CHECK(h.left_limit(0.5) == 2.0);
  CHECK(h.right_limit(0.5) == -2.0);
  CHECK(h.integral() == doctest::Approx(0.0));

  const PiecewisePoly ind({0.0, 2.0}, {Polynomial::constant(1.0)}, {{0.0, 0.0}});  // 1_(0,2)
  CHECK(ind(0.0) == 0.0);
  CHECK(ind.right_limit(0.0) == 1.0);
  CHECK_THROWS_AS(PiecewisePoly({1.0, 0.0}, {Polynomial::constant(1.0)}), Error);
}

TEST_CASE("sup on window matches calculus maxima") {
  const auto sched = ResolutionSchedule::defaults();
  const Domain d = Domain::segment(0.0, 1.0);

  const std::vector<std::pair<double, double>> id{{0.0, 0.0}, {1.0, 1.0}};
  const auto lin = FunctionOracle::piecewise(d, PiecewisePoly::linear_through(id));
  const auto a = sup_on_window(lin, Interval::closed(0.0, 1.0), sched);
  CHECK(a.exact);
  CHECK(a.value == doctest::Approx(1.0));

  // max of n t e^{-n t} is e^{-1} at t = 1/n
  const auto bump = FunctionOracle::closure(d, [](double t) { return 4.0 * t * std::exp(-4.0 * t); });
  const auto b = sup_on_window(bump, Interval::closed(0.0, 1.0), sched);
  CHECK_FALSE(b.exact);
  CHECK(b.value == doctest::Approx(std::exp(-1.0)).epsilon(1e-5));
  CHECK(b.arg == doctest::Approx(0.25).epsilon(1e-2));

  const auto s = sup_on_window(FunctionOracle::piecewise(d, spike4()), Interval::closed(0.0, 1.0), sched);
  CHECK(s.exact);
  CHECK(s.value == 4.0);
  CHECK(s.arg == 0.5);
}

TEST_CASE("grid evaluation includes breakpoints with right-hand values") {
  auto sched = ResolutionSchedule::defaults();
  sched.base_grid = 4;
  const Domain d = Domain::segment(0.0, 1.0);
  const auto z = eval_on_grid(FunctionOracle::zero(d), Interval::closed(0.0, 1.0), sched);
  REQUIRE(z.size() == 5);
  for (std::size_t i = 0; i < z.size(); ++i) {
    CHECK(z[i].first == 0.25 * static_cast<double>(i));
    CHECK(z[i].second == 0.0);
  }

  sched.base_grid = 1024;
  const auto h = eval_on_grid(FunctionOracle::piecewise(d, haar()), Interval::closed(0.0, 1.0), sched);
  CHECK(value_at(h, 0.0) == 2.0);
  CHECK(value_at(h, 0.5) == -2.0);
  CHECK(value_at(h, 1.0) == 0.0);

  const auto sp = eval_on_grid(FunctionOracle::piecewise(d, spike4()), Interval::closed(0.0, 1.0), sched);
  CHECK(value_at(sp, 0.25) == 0.0);
  CHECK(value_at(sp, 0.5) == 4.0);
  CHECK(value_at(sp, 0.75) == 0.0);
}

TEST_CASE("schedule invariants and round trip") {
  const auto s = ResolutionSchedule::defaults();
  CHECK_NOTHROW(s.validate());
  for (std::size_t i = 1; i < s.eps_ladder.size(); ++i) CHECK(s.eps_ladder[i] < s.eps_ladder[i - 1]);
  CHECK(s.eta_ladder.front() == 0.5);
  const auto back = ResolutionSchedule::from_json(s.to_json());
  CHECK(back.to_json() == s.to_json());

  auto bad = s;
  bad.eps_ladder = {0.1, 0.2};
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = s;
  bad.n_max = 1;
  CHECK_THROWS_AS(bad.validate(), Error);
  CHECK_THROWS_AS(ResolutionSchedule::from_json(json{{"eta_ladder", {0.5, -1.0}}}), Error);
}

TEST_CASE("sampled indices cover the small range and both caps") {
  const auto idx = sampled_indices(1, 512);
  for (std::uint64_t n = 1; n < 16; ++n) CHECK(idx[n - 1] == n);
  CHECK(idx.back() == 512);
  for (std::size_t i = 1; i < idx.size(); ++i) CHECK(idx[i] > idx[i - 1]);
  // Geometric ratio 2^(1/16): about 16 indices per doubling above 16.
  CHECK(idx.size() < 15 + 16 * 5 + 2);
  const auto mid = sampled_indices(100, 200);
  CHECK(mid.front() == 100);
  CHECK(mid.back() == 200);
}

TEST_CASE("circle windows wrap around zero") {
  const Domain c = Domain::circle();
  CHECK(c.wrap(1.25) == doctest::Approx(0.25));
  CHECK(c.wrap(-0.25) == doctest::Approx(0.75));
  const auto w = c.window(0.0, 0.125);
  double total = 0.0;
  for (const auto& piece : w) total += piece.width();
  CHECK(total == doctest::Approx(0.25));
  CHECK(w.size() == 2);

  const Domain h = Domain::half_line(16.0);
  const auto hw = h.window(0.0, 0.5);
  REQUIRE(hw.size() == 1);
  CHECK(hw[0].lo == 0.0);
}

TEST_CASE("gap of two piecewise oracles is exact") {
  const auto sched = ResolutionSchedule::defaults();
  const Domain d = Domain::segment(0.0, 1.0);
  const Gap g(FunctionOracle::piecewise(d, spike4()), FunctionOracle::piecewise(d, haar()));
  CHECK(g.exact());
  CHECK(g(0.5) == doctest::Approx(6.0));
  const auto s = g.sup(Interval::closed(0.0, 1.0), sched);
  CHECK(s.value == doctest::Approx(6.0));
}

TEST_CASE("oracle evaluation is deterministic") {
  const Domain d = Domain::half_line(16.0);
  const auto f = FunctionOracle::closure(d, [](double t) { return std::sin(t) * std::exp(-t); });
  for (double t : {0.1, 1.7, 9.3}) CHECK(f(t) == f(t));
}
