#include <doctest.h>

#include <cmath>
#include <set>

#include "stickylab/catalog.hpp"

using namespace stickylab;
using catalog::FamilySpec;
using catalog::Kind;

namespace {

// Composite Simpson on [-L, L].
double integrate(double (*f)(double), double L, int m = 20000) {
  const double h = 2.0 * L / m;
  double s = f(-L) + f(L);
  for (int i = 1; i < m; ++i) s += f(-L + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace

TEST_CASE("scaled bump member values") {
  const auto fam = catalog::builtin("scaled-bump-exp");
  // n t e^{-n t} at n = 4, t = 1/4
  CHECK(fam(4)(0.25) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(fam(7)(0.0) == 0.0);
  CHECK(fam(3)(2.0) == doctest::Approx(6.0 * std::exp(-6.0)));
}

TEST_CASE("built-in Poisson xi has zero value and zero integral") {
  CHECK(humps::poisson_xi(0.0) == 0.0);
  // int x^2 e^{-x^2} = sqrt(pi)/2 and int x^4 e^{-x^2} = 3 sqrt(pi)/4 give 0 for 3x^2 - 2x^4.
  CHECK(std::abs(integrate(humps::poisson_xi, 12.0)) < 1e-12);
  CHECK(humps::poisson_xi(1.5) == doctest::Approx((3 * 2.25 - 2 * 5.0625) * std::exp(-2.25)));
}

TEST_CASE("spike is affine between support ends and peak") {
  const auto fam = catalog::make_family(FamilySpec{Kind::Spike, {{"k", 4.0}, {"t0", 0.5}}});
  const auto f = fam(1);
  CHECK(f(0.5) == 4.0);
  CHECK(f(0.25) == 0.0);
  CHECK(f(0.75) == 0.0);
  CHECK(f(0.375) == doctest::Approx(2.0));
  CHECK(f(0.625) == doctest::Approx(2.0));
}

TEST_CASE("indicator front values") {
  const auto fam = catalog::builtin("indicator-front");
  CHECK(fam(8)(0.1) == 0.0);   // 0.1 < 1/8
  CHECK(fam(8)(0.125) == 1.0);
  CHECK(fam(8)(3.0) == 1.0);
  const auto& lim = *fam.label.pointwise_limit;
  CHECK(lim(0.0) == 0.0);
  CHECK(lim(1e-9) == 1.0);
}

TEST_CASE("catalog labels") {
  std::set<std::string> names;
  std::size_t labelled = 0;
  for (const auto& e : catalog::catalog_list()) {
    CHECK(names.insert(e.name).second);
    CHECK(e.label.consistent());
    if (e.label.sticky != Tri::Unknown) ++labelled;
    // Locally uniform implies sticky implies a limit.
    if (e.label.locally_uniform == Tri::Yes) CHECK(e.label.sticky == Tri::Yes);
    if (e.label.sticky == Tri::Yes) CHECK(e.label.pointwise_limit.has_value());
  }
  CHECK(labelled >= 10);

  const auto bump = catalog::builtin("scaled-bump-exp");
  CHECK(bump.label.sticky == Tri::Yes);
  CHECK(bump.label.locally_uniform == Tri::No);
  CHECK(catalog::builtin("indicator-front").label.limit_continuous == Tri::No);
  const auto lin = catalog::builtin("linear-shrink");
  CHECK(lin.label.locally_uniform == Tri::Yes);
  CHECK(lin(4)(2.0) == doctest::Approx(0.5));
}

TEST_CASE("members are pure and share the domain") {
  for (const auto& e : catalog::catalog_list()) {
    const auto fam = catalog::make_family(e.spec);
    const auto a = fam(5), b = fam(5), c = fam(9);
    CHECK(a.domain() == fam.domain);
    CHECK(c.domain() == fam.domain);
    const double t = fam.domain.periodic ? 0.3 : fam.domain.span.lo + 0.3;
    CHECK(a(t) == b(t));
  }
}

TEST_CASE("spec round trip and parameter validation") {
  for (const auto& e : catalog::catalog_list()) {
    const auto back = FamilySpec::from_json(e.spec.to_json());
    CHECK(back.to_json() == e.spec.to_json());
  }
  CHECK_THROWS_AS(catalog::builtin("no-such-family"), Error);
  CHECK_FALSE(catalog::is_builtin("no-such-family"));
  CHECK_THROWS_AS(catalog::make_family(FamilySpec{Kind::Spike, {{"k", -1.0}, {"t0", 0.5}}}), Error);
  CHECK_THROWS_AS(catalog::kind_from_string("nope"), Error);
}

TEST_CASE("alpha schedules") {
  CHECK(catalog::alpha_schedule("sqrt(n)")(16.0) == doctest::Approx(4.0));
  CHECK(catalog::alpha_schedule("n/log(n+2)")(8.0) == doctest::Approx(8.0 / std::log(10.0)));
  CHECK(catalog::alpha_schedule("1")(123.0) == 1.0);
  CHECK(catalog::alpha_schedule("n^0.5")(9.0) == doctest::Approx(3.0));
  CHECK_THROWS_AS(catalog::alpha_schedule("bogus"), Error);
}

TEST_CASE("Poisson limit by direct summation") {
  const auto in = humps::PoissonInput::builtin();
  // S(1) = 2 sum_{n >= 1} xi(n) for the even xi.
  double direct = 0.0;
  for (int n = 1; n <= 10000; ++n) direct += 2.0 * humps::poisson_xi(n);
  CHECK(catalog::poisson_limit_value(in, 1.0) == doctest::Approx(direct).epsilon(1e-12));
}
