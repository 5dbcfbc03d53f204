#include <doctest.h>

#include <cmath>

#include "stickylab/seqspace.hpp"

using namespace stickylab;
using namespace stickylab::seqspace;

namespace {

TailedSequence finite(std::vector<double> prefix) {
  TailedSequence u;
  u.prefix = std::move(prefix);
  return u;
}

// sum_{k < 2000} 2^-k |u(k)| plus the tail limsup given by hand.
double direct_norm(const TailedSequence& u, double limsup) {
  double s = 0.0;
  for (int k = 1999; k >= 0; --k) s += std::ldexp(std::abs(u(static_cast<std::uint64_t>(k))), -k);
  return s + limsup;
}

}  // namespace

TEST_CASE("norm examples") {
  CHECK(ls_norm(TailedSequence::unit(0)) == 1.0);
  CHECK(ls_norm(TailedSequence::constant(1.0)) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(ls_norm(TailedSequence::geometric(0.5, 1.0)) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  for (int n = 0; n <= 40; ++n) CHECK(ls_norm(TailedSequence::unit(n)) == std::ldexp(1.0, -n));

  const auto p = TailedSequence::periodic({1.0, -3.0, 2.0}, {0.5, 0.25});
  CHECK(p.limsup_abs() == 3.0);
  CHECK(ls_norm(p) == doctest::Approx(direct_norm(p, 3.0)).epsilon(1e-14));
  CHECK(sup_norm(p) == 3.0);
}

TEST_CASE("sequence operations") {
  const auto g = TailedSequence::geometric(0.5, 2.0, {7.0});
  CHECK(g(0) == 7.0);
  CHECK(g(1) == 2.0);
  CHECK(g(3) == 0.5);
  const auto r = g.rebased(6);
  CHECK(r.K() == 6);
  for (std::uint64_t k = 0; k < 12; ++k) CHECK(r(k) == doctest::Approx(g(k)));
  const auto s = g.shifted();
  for (std::uint64_t k = 0; k < 12; ++k) CHECK(s(k) == doctest::Approx(g(k + 1)));
  const auto m = g.scaled(-2.0);
  CHECK(ls_norm(m) == doctest::Approx(2.0 * ls_norm(g)));
  const auto back = TailedSequence::from_json(g.to_json());
  for (std::uint64_t k = 0; k < 12; ++k) CHECK(back(k) == g(k));
  CHECK_THROWS_AS(TailedSequence::from_json(json{{"prefix", {1}}, {"kind", "constant"}}), Error);
  CHECK_THROWS_AS(TailedSequence::geometric(2.0, 1.0).validate(), Error);
}

TEST_CASE("combinations and pairing") {
  const auto u = TailedSequence::constant(1.0, {2.0});
  const auto v = TailedSequence::periodic({1.0, -1.0});
  const double c = ls_norm_combination(u, 1.0, v, -1.0);
  // u - v = (1, 2, 0, 2, 0, ...): limsup 2
  const TailedSequence w = TailedSequence::periodic({2.0, 0.0}, {1.0});
  CHECK(c == doctest::Approx(direct_norm(w, 2.0)).epsilon(1e-14));
  CHECK(ls_norm_combination(u, 1.0, u, -1.0) == 0.0);

  const auto a = TailedSequence::geometric(0.5, 1.0);
  // sum_k 2^-k * 1 = 2
  CHECK(l1_pairing(TailedSequence::constant(1.0), a) == doctest::Approx(2.0));
}

TEST_CASE("Cauchy criterion in l_s") {
  CHECK(ls_cauchy([](std::uint64_t n) { return TailedSequence::unit(n); }).holds());
  const auto front = ls_cauchy([](std::uint64_t n) { return TailedSequence::constant(1.0, std::vector<double>(n, 0.0)); });
  CHECK(front.fails());
  CHECK(ls_cauchy([](std::uint64_t) { return TailedSequence::constant(0.3); }).holds());
}

TEST_CASE("closedness probes") {
  CHECK(closedness_probe(Space::from_string("c0"), [](std::uint64_t n) { return TailedSequence::unit(n); },
                         TailedSequence::zero())
            .holds());
  const auto ones = closedness_probe(
      Space::from_string("c0"), [](std::uint64_t n) { return finite(std::vector<double>(n, 1.0)); },
      TailedSequence::constant(1.0));
  REQUIRE(ones.fails());
  CHECK(ones.witness.dump().find("not an l_s limit") != std::string::npos);

  const auto l2 = closedness_probe(
      Space::from_string("lp:2"),
      [](std::uint64_t n) {
        std::vector<double> pre(n);
        for (std::uint64_t k = 0; k < n; ++k) pre[k] = std::ldexp(1.0, -static_cast<int>(k));
        return finite(pre);
      },
      TailedSequence::geometric(0.5, 1.0));
  CHECK(l2.holds());
}

TEST_CASE("space membership") {
  CHECK(Space::from_string("c0").contains(TailedSequence::geometric(0.5, 1.0)));
  CHECK_FALSE(Space::from_string("c0").contains(TailedSequence::constant(1.0)));
  CHECK(Space::from_string("c").contains(TailedSequence::constant(1.0)));
  CHECK_FALSE(Space::from_string("c").contains(TailedSequence::periodic({0.0, 1.0})));
  CHECK(Space::from_string("lp:1").contains(TailedSequence::geometric(0.9, 1.0)));
  CHECK_FALSE(Space::from_string("lp:2").contains(TailedSequence::constant(0.1)));
  CHECK(Space::from_string("linf").contains(TailedSequence::periodic({0.0, 1.0})));
  CHECK_THROWS_AS(Space::from_string("l7"), Error);
}
