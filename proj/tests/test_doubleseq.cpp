#include <doctest.h>

#include <cmath>

#include "stickylab/catalog.hpp"
#include "stickylab/doubleseq.hpp"

using namespace stickylab;
using namespace stickylab::doubleseq;

namespace {

DoubleSequenceOracle make(std::string name, std::function<double(std::uint64_t, std::uint64_t)> f) {
  DoubleSequenceOracle s;
  s.name = std::move(name);
  s.at = std::move(f);
  return s;
}

double bump_entry(std::uint64_t i, std::uint64_t j) {
  const double x = static_cast<double>(i) / static_cast<double>(j);
  return x * std::exp(-x);
}

}  // namespace

TEST_CASE("cluster points of f_i(1/j) for the scaled bump") {
  const auto sigma = from_family(catalog::builtin("scaled-bump-exp"), functionals::TimeSequence::reciprocal(0.0, 1.0));
  for (std::uint64_t i : {1, 7, 30})
    for (std::uint64_t j : {1, 5, 200}) CHECK(sigma(i, j) == doctest::Approx(bump_entry(i, j)).epsilon(1e-12));

  const ClusterPolicy policy;
  CHECK(qualifies(sigma, 0.0, policy));
  CHECK_FALSE(qualifies(sigma, std::exp(-1.0), policy));

  // Row scan oracle: an early row i has (i/j) e^{-i/j} near e^{-1} only for j near i.
  std::uint64_t rows_hit = 0;
  for (std::uint64_t i = 1; i <= sigma.i_max / 4; ++i) {
    std::uint64_t hits = 0;
    for (std::uint64_t j = sigma.j_max / 2 + 1; j <= sigma.j_max; ++j)
      if (std::abs(bump_entry(i, j) - std::exp(-1.0)) < policy.eps) ++hits;
    if (hits >= policy.row_count_min) ++rows_hit;
  }
  CHECK(rows_hit < policy.rows_min);
}

TEST_CASE("constant double sequence has a single candidate") {
  const auto c = make("c", [](std::uint64_t, std::uint64_t) { return 0.7; });
  const auto cands = double_cluster_candidates(c, ClusterPolicy{});
  REQUIRE(cands.size() == 1);
  CHECK(cands[0].value == doctest::Approx(0.7));
}

TEST_CASE("flat on edges") {
  const auto inv = make("1/(i+j)", [](std::uint64_t i, std::uint64_t j) { return 1.0 / static_cast<double>(i + j); });
  const auto a = flat_on_edges(inv, [](std::uint64_t) { return 0; }, 0.05);
  REQUIRE(a.holds());
  CHECK(a.certificate.at("L").get<double>() == doctest::Approx(0.0).epsilon(0.05));

  const auto gauss = make("gauss", [](std::uint64_t i, std::uint64_t j) {
    const double d = static_cast<double>(i) - static_cast<double>(j);
    return std::exp(-d * d);
  });
  const auto b = flat_on_edges(gauss, [](std::uint64_t) { return 2; }, 0.02);
  REQUIRE(b.holds());
  CHECK(std::abs(b.certificate.at("L").get<double>()) <= std::exp(-4.0));

  const auto upper = make("upper", [](std::uint64_t i, std::uint64_t j) { return i < j ? 1.0 : 0.0; });
  const auto c = flat_on_edges(upper, [](std::uint64_t) { return 1; }, 0.05);
  REQUIRE(c.fails());
  CHECK(c.witness.dump().find("low") != std::string::npos);
  CHECK(c.witness.dump().find("high") != std::string::npos);
}

TEST_CASE("flat limits appear among cluster candidates") {
  for (const auto& b : builtin_double_sequences()) {
    CHECK_NOTHROW(b.sigma.validate());
    const auto v = flat_on_edges(b.sigma, b.kappa, b.tol);
    if (!v.holds()) continue;
    const double L = v.certificate.at("L").get<double>();
    bool found = false;
    for (const auto& c : double_cluster_candidates(b.sigma, ClusterPolicy{}))
      found = found || std::abs(c.value - L) <= ClusterPolicy{}.eps;
    CHECK_MESSAGE(found, b.sigma.name);
  }
}

TEST_CASE("hump modulus") {
  const auto sched = ResolutionSchedule::defaults();
  const auto train = catalog::builtin("bump-train");
  for (double s : {1.0 / 64, 0.25, 1.0}) CHECK(hump_modulus(train, s, 0.0, sched).rho == 0.0);

  const auto sinf = catalog::builtin("sin-no-limit");
  for (double s : {0.5, 1.25, 2.75}) {
    double oracle = 0.0;
    for (std::uint64_t n = sched.n_max + 1; n <= 2 * sched.n_max; ++n)
      oracle = std::max(oracle, std::abs(std::sin(static_cast<double>(n) * s)));
    const double rho = hump_modulus(sinf, s, 0.0, sched).rho;
    CHECK(rho == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(rho >= 0.99);
  }

  const auto flat = catalog::builtin("constant-spike");
  const auto f = flat.at(1);
  CHECK(hump_modulus(flat, 0.3, 0.5, sched).rho == doctest::Approx(std::abs(f(0.3) - f(0.5))).epsilon(1e-14));
}

TEST_CASE("compactness diagnostic") {
  const auto sched = ResolutionSchedule::defaults();
  CHECK(compactness_diagnostic(catalog::builtin("scaled-bump-exp"), sched).holds());
  CHECK(compactness_diagnostic(catalog::builtin("constant-spike"), sched).holds());
  const auto v = compactness_diagnostic(catalog::builtin("indicator-front-mollified"), sched);
  REQUIRE(v.fails());
  CHECK(v.witness.at("x").get<double>() == 0.0);
}

TEST_CASE("double sequence validation") {
  auto s = make("c", [](std::uint64_t, std::uint64_t) { return 1.0; });
  const auto d = s.doubled();
  CHECK(d.i_max == 2 * s.i_max);
  CHECK(d.j_max == 2 * s.j_max);
  s.i_max = 0;
  CHECK_THROWS_AS(s.validate(), Error);
  ClusterPolicy p;
  p.eps = -1.0;
  CHECK_THROWS_AS(p.validate(), Error);
}
