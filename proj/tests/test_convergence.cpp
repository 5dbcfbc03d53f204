#include <doctest.h>

#include <cmath>

#include "stickylab/catalog.hpp"
#include "stickylab/convergence.hpp"

using namespace stickylab;
using namespace stickylab::convergence;

namespace {

const ResolutionSchedule& sched() {
  static const auto s = ResolutionSchedule::defaults();
  return s;
}

FunctionOracle tent(const Domain& d, double a, double b) {
  const std::vector<std::pair<double, double>> nodes{{a, 0.0}, {0.5 * (a + b), 1.0}, {b, 0.0}};
  Metadata meta;
  meta.humps = {Interval::closed(a, b)};
  meta.humps_declared = true;
  meta.continuous = true;
  return FunctionOracle::piecewise(d, PiecewisePoly::linear_through(nodes), meta);
}

SequenceFamily zero_family(const Domain& d) {
  SequenceFamily z;
  z.name = "zero";
  z.domain = d;
  z.at = [d](std::uint64_t) {
    Metadata meta;
    meta.humps_declared = true;
    return FunctionOracle::piecewise(d, PiecewisePoly::zero(), meta);
  };
  z.members_continuous = true;
  z.label.pointwise_limit = FunctionOracle::zero(d);
  z.label.sticky = Tri::Yes;
  z.label.locally_uniform = Tri::Yes;
  z.label.limit_continuous = Tri::Yes;
  return z;
}

double first_eta(const Verdict& v) { return v.certificate.at("points").at(0).at("eta").get<double>(); }

}  // namespace

TEST_CASE("neighbourhood membership") {
  const Domain d = Domain::half_line(16.0);
  const auto zero = FunctionOracle::zero(d);

  const std::vector<std::pair<double, double>> id{{0.0, 0.0}, {16.0, 16.0}};
  const auto g = FunctionOracle::piecewise(d, PiecewisePoly::linear_through(id));
  const NeighbourhoodSpec lin{zero, {0.0}, 0.1};
  const auto v = neighbourhood_contains(lin, g, sched());
  REQUIRE(v.holds());
  CHECK(first_eta(v) == 0.0625);  // coarsest dyadic eta with eta < 0.1
  CHECK(replay(v, lin, g));

  const auto ind = *catalog::builtin("indicator-front").label.pointwise_limit;
  const NeighbourhoodSpec half{zero, {0.0}, 0.5};
  const auto f = neighbourhood_contains(half, ind, sched());
  CHECK(f.fails());
  CHECK(replay(f, half, ind));

  const Domain c = Domain::circle();
  const std::vector<std::pair<double, double>> sp{{0.0, 0.0}, {0.25, 0.0}, {0.5, 4.0}, {0.75, 0.0}, {1.0, 0.0}};
  const auto spike = FunctionOracle::piecewise(c, PiecewisePoly::linear_through(sp));
  const NeighbourhoodSpec at0{FunctionOracle::zero(c), {0.0}, 0.1};
  const auto s = neighbourhood_contains(at0, spike, sched());
  REQUIRE(s.holds());
  // The spike vanishes on (-1/4, 1/4), so any eta <= 1/4 passes.
  CHECK(first_eta(s) >= 0.125);
  CHECK(first_eta(s) <= 0.25);
}

TEST_CASE("pointwise detector") {
  const auto lin = catalog::builtin("linear-shrink");
  CHECK(detect_pointwise(lin, *lin.label.pointwise_limit, sched()).holds());

  const auto front = catalog::builtin("indicator-front");
  const auto good = detect_pointwise(front, *front.label.pointwise_limit, sched());
  CHECK(good.holds());
  CHECK(replay(good, front, &*front.label.pointwise_limit));

  const auto zero = FunctionOracle::zero(front.domain);
  const auto bad = detect_pointwise(front, zero, sched());
  REQUIRE(bad.fails());
  CHECK(replay(bad, front, &zero));
}

TEST_CASE("sticky detector") {
  const auto bump = catalog::builtin("scaled-bump-exp");
  const auto v = detect_sticky(bump, *bump.label.pointwise_limit, sched());
  CHECK(v.holds());
  CHECK(replay(v, bump, &*bump.label.pointwise_limit));

  const auto front = catalog::builtin("indicator-front");
  const auto f = detect_sticky(front, *front.label.pointwise_limit, sched());
  REQUIRE(f.fails());
  CHECK(f.witness.at("t").get<double>() == 0.0);
  CHECK(replay(f, front, &*front.label.pointwise_limit));

  const auto lin = catalog::builtin("linear-shrink");
  CHECK(detect_sticky(lin, *lin.label.pointwise_limit, sched()).holds());
}

TEST_CASE("locally uniform detector") {
  const auto lin = catalog::builtin("linear-shrink");
  CHECK(detect_locally_uniform(lin, *lin.label.pointwise_limit, sched()).holds());

  const auto bump = catalog::builtin("scaled-bump-exp");
  const auto v = detect_locally_uniform(bump, *bump.label.pointwise_limit, sched());
  REQUIRE(v.fails());
  CHECK(v.witness.at("t").get<double>() == 0.0);
  // sup of n t e^{-n t} on (0, eta) is e^{-1} once 1/n < eta.
  CHECK(v.witness.at("eps").get<double>() <= std::exp(-1.0));
  CHECK(replay(v, bump, &*bump.label.pointwise_limit));

  // One hump alpha_1 = 1 at t_1 = 1 is already enough.
  const auto sig = catalog::make_family(
      catalog::FamilySpec{catalog::Kind::PerturbedSignal, {{"alpha", {1.0}}, {"t", {1.0}}}});
  const auto s = detect_locally_uniform(sig, *sig.label.pointwise_limit, sched());
  REQUIRE(s.fails());
  CHECK(s.witness.at("t").get<double>() == doctest::Approx(1.0));
}

TEST_CASE("Cauchy form") {
  CHECK(sticky_cauchy(catalog::builtin("scaled-bump-exp"), sched()).holds());
  const auto f = sticky_cauchy(catalog::builtin("indicator-front"), sched());
  REQUIRE(f.fails());
  CHECK(f.witness.at("t").get<double>() == 0.0);

  const auto c = catalog::builtin("constant-spike");
  const auto v = sticky_cauchy(c, sched());
  CHECK(v.holds());
  CHECK(replay(v, c, nullptr));
}

TEST_CASE("eventual equality transfer") {
  const Domain d = Domain::half_line(16.0);
  const auto ref = zero_family(d);
  const auto zero = FunctionOracle::zero(d);

  SequenceFamily walk = ref;
  walk.name = "walk-right";
  walk.at = [d, z = ref.at](std::uint64_t n) {
    const double a = static_cast<double>(n);
    return a + 1.0 <= d.span.hi ? tent(d, a, a + 1.0) : z(n);  // past the horizon the bump is gone
  };
  CHECK(eventual_equality_transfer(walk, ref, zero, sched()).holds());

  SequenceFamily glide = ref;
  glide.name = "glide-to-zero";
  glide.at = [d](std::uint64_t n) {
    const double nd = static_cast<double>(n);
    return tent(d, 1.0 / (nd + 1.0), 1.0 / nd);
  };
  const auto v = eventual_equality_transfer(glide, ref, zero, sched());
  REQUIRE(v.fails());
  CHECK(v.witness.at("t").get<double>() == 0.0);

  CHECK(eventual_equality_transfer(ref, ref, zero, sched()).holds());
}
