#include <doctest.h>

#include <cmath>
#include <numbers>

#include "stickylab/catalog.hpp"
#include "stickylab/convergence.hpp"
#include "stickylab/functionals.hpp"

using namespace stickylab;
using namespace stickylab::functionals;

namespace {

const ResolutionSchedule& sched() {
  static const auto s = ResolutionSchedule::defaults();
  return s;
}

// Brute-force up-crossing count over a uniform grid of m + 1 points.
std::uint64_t brute_upcrossings(const std::function<double(double)>& f, double a, double b, double lo, double hi,
                                int m = 10000) {
  std::uint64_t count = 0;
  bool below = false;
  for (int i = 0; i <= m; ++i) {
    const double y = f(lo + (hi - lo) * i / m);
    if (!below && y < a) below = true;
    else if (below && y > b) {
      below = false;
      ++count;
    }
  }
  return count;
}

SequenceFamily closure_family(std::string name, Domain d, std::function<double(std::uint64_t, double)> f) {
  SequenceFamily fam;
  fam.name = std::move(name);
  fam.domain = d;
  fam.at = [d, f](std::uint64_t n) { return FunctionOracle::closure(d, [f, n](double x) { return f(n, x); }); };
  fam.members_continuous = true;
  return fam;
}

}  // namespace

TEST_CASE("limsup along reciprocal times") {
  const Domain d = Domain::half_line(16.0);
  const auto tau = TimeSequence::reciprocal(0.0);
  CHECK_NOTHROW(tau.validate());

  const std::vector<std::pair<double, double>> nodes{{0.0, 0.3}, {1.0, 1.3}, {16.0, 1.3}};
  const auto cont = FunctionOracle::piecewise(d, PiecewisePoly::linear_through(nodes));
  const auto r = limsup_along(cont, tau);
  CHECK(r.S == doctest::Approx(0.3).epsilon(2e-3));
  CHECK(r.I == doctest::Approx(0.3).epsilon(2e-3));

  const auto ind = *catalog::builtin("indicator-front").label.pointwise_limit;
  const auto j = limsup_along(ind, tau);
  CHECK(j.S == 1.0);
  CHECK(j.I == 1.0);
  CHECK(ind(0.0) == 0.0);

  const auto osc = FunctionOracle::closure(d, [](double t) { return t > 0.0 ? std::sin(1.0 / t) : 0.0; });
  const auto o = limsup_along(osc, tau);
  double hi = -2.0, lo = 2.0;
  for (std::uint64_t k = tau.k_max - tau.tail_window + 1; k <= tau.k_max; ++k) {
    const double v = std::sin(1.0 / tau.term(k));
    hi = std::max(hi, v);
    lo = std::min(lo, v);
  }
  CHECK(o.S == doctest::Approx(hi));
  CHECK(o.I == doctest::Approx(lo));
  CHECK(o.S > 0.99);
  CHECK(o.I < -0.99);
}

TEST_CASE("time sequence validation") {
  auto bad = TimeSequence::reciprocal(0.0);
  bad.term = [](std::uint64_t) { return 0.5; };
  CHECK_THROWS_AS(bad.validate(), Error);
  const auto seqs = builtin_time_sequences(Domain::half_line(16.0), 0.0);
  CHECK(seqs.size() == 2);  // nothing to the left of 0
  CHECK(builtin_time_sequences(Domain::half_line(16.0), 3.0).size() == 3);
}

TEST_CASE("up-crossings against a brute-force grid") {
  const Domain d = Domain::segment(0.0, 1.0);
  const Interval w = Interval::closed(0.0, 1.0);
  CHECK(upcrossings(FunctionOracle::zero(d), -0.5, 0.5, w, sched()) == 0);

  const std::vector<std::pair<double, double>> zig{{0.0, 0.0}, {0.2, 1.0}, {0.4, -1.0}, {0.6, 1.0}, {0.8, -1.0}, {1.0, 0.0}};
  const auto z = PiecewisePoly::linear_through(zig);
  const auto brute_z = brute_upcrossings([&](double t) { return z(t); }, -0.5, 0.5, 0.0, 1.0);
  CHECK(brute_z == 1);
  CHECK(upcrossings(FunctionOracle::piecewise(d, z), -0.5, 0.5, w, sched()) == brute_z);

  auto s6 = [](double t) { return std::sin(6.0 * std::numbers::pi * t); };
  const auto brute_s = brute_upcrossings(s6, -0.5, 0.5, 0.0, 1.0);
  CHECK(brute_s == 2);
  CHECK(upcrossings(FunctionOracle::closure(d, s6), -0.5, 0.5, w, sched()) == brute_s);
}

TEST_CASE("pointwise regularity") {
  const Domain d = Domain::half_line(16.0);
  const auto step = FunctionOracle::piecewise(d, PiecewisePoly::constant(0.0, 1.0, 1.0));  // 1_[0,1)
  CHECK(check_property(step, Property::right_continuous_at(0.0), sched()).holds());
  CHECK(check_property(step, Property::right_continuous_at(1.0), sched()).holds());
  CHECK(check_property(step, Property::continuous_at(1.0), sched()).fails());
  CHECK(check_property(step, Property::left_limit_at(1.0), sched()).holds());

  const auto ind = *catalog::builtin("indicator-front").label.pointwise_limit;
  const auto v = check_property(ind, Property::right_continuous_at(0.0), sched());
  REQUIRE(v.fails());
  CHECK(v.witness.at("gap").get<double>() == 1.0);

  const Domain c = Domain::circle();
  const std::vector<std::pair<double, double>> sp{{0.0, 0.0}, {0.25, 0.0}, {0.5, 4.0}, {0.75, 0.0}, {1.0, 0.0}};
  const auto spike = FunctionOracle::piecewise(c, PiecewisePoly::linear_through(sp));
  CHECK(check_property(spike, Property::cadlag(), sched()).holds());
  CHECK(check_property(spike, Property::locally_bounded(), sched()).holds());
  CHECK(check_property(spike, Property::upper_sc(0.5), sched()).holds());

  // 1_(0,inf) is lower but not upper semicontinuous at 0.
  CHECK(check_property(ind, Property::lower_sc(0.0), sched()).holds());
  CHECK(check_property(ind, Property::upper_sc(0.0), sched()).fails());
}

TEST_CASE("series transfer rules") {
  auto s = sched();
  const Domain d02 = Domain::segment(0.0, 2.0);
  const auto expo = closure_family("x^n/n!", d02, [](std::uint64_t n, double x) {
    // Log form: pow and tgamma both overflow long before the ratio does.
    const double nd = static_cast<double>(n);
    return x == 0.0 ? 0.0 : std::exp(nd * std::log(x) - std::lgamma(nd + 1.0));
  });
  CHECK(series_transfer(expo, SeriesMode::normal(), s).holds());

  const Domain ds = Domain::segment(0.5, std::numbers::pi - 0.5);
  const auto sines = closure_family("sin(nx)", ds, [](std::uint64_t n, double x) {
    return std::sin(static_cast<double>(n) * x);
  });
  const auto weights = closure_family("1/n", ds, [](std::uint64_t n, double) { return 1.0 / static_cast<double>(n); });
  CHECK(series_transfer(sines, SeriesMode::abel(weights), s).holds());

  CHECK(series_transfer(expo, SeriesMode::domination(expo, 1.0, 1), s).holds());
  // sin(nx) is not absolutely summable.
  CHECK_FALSE(series_transfer(sines, SeriesMode::normal(), s).holds());
}
