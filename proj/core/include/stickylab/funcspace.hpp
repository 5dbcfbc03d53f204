#pragma once

// Core representations: intervals, polynomials, piecewise polynomials,
// function oracles, sequence families, resolution schedules and verdicts.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace stickylab {

using json = nlohmann::json;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Absolute tolerance for equality comparisons between reals.
inline constexpr double kTol = 1e-12;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_open = false;
  bool hi_open = false;

  static Interval closed(double a, double b) { return {a, b, false, false}; }
  static Interval open(double a, double b) { return {a, b, true, true}; }
  static Interval right_open(double a, double b) { return {a, b, false, true}; }

  bool empty() const;
  bool contains(double t) const;
  double width() const { return hi - lo; }
  Interval intersect(const Interval& other) const;
  // True when *this is a subset of other.
  bool within(const Interval& other) const;
};

// Function domain: an interval of the real line, or the circle R/Z
// represented by [0, 1) with wrap-around.
struct Domain {
  Interval span = Interval::closed(0.0, 16.0);
  bool periodic = false;

  static Domain half_line(double horizon) { return {Interval::closed(0.0, horizon), false}; }
  static Domain circle() { return {Interval::right_open(0.0, 1.0), true}; }
  static Domain segment(double a, double b) { return {Interval::closed(a, b), false}; }

  bool contains(double t) const;
  double wrap(double t) const;
  // (t - radius, t + radius) intersected with the domain, as disjoint pieces.
  std::vector<Interval> window(double t, double radius) const;
  bool operator==(const Domain& o) const;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);
  static Polynomial constant(double c) { return Polynomial({c}); }
  static Polynomial monomial(std::size_t degree, double c = 1.0);

  double operator()(double x) const;
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<double>& coeffs() const { return coeffs_; }

  Polynomial derivative() const;
  // Antiderivative vanishing at 0.
  Polynomial antiderivative() const;
  // x -> p(a + b x)
  Polynomial compose_affine(double a, double b) const;
  Polynomial shifted(double a) const { return compose_affine(a, 1.0); }
  double integral(double lo, double hi) const;
  // Real roots in [lo, hi], sorted (degree <= 3 closed form, otherwise bisection scan).
  std::vector<double> roots_in(double lo, double hi) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(double s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

 private:
  void trim();
  std::vector<double> coeffs_;
};

struct Extremum {
  double value = 0.0;  // sup of |f|
  double arg = 0.0;    // a point where it is attained or approached
};

// Piece i lives on [breaks[i], breaks[i+1]) in the local coordinate
// x = t - breaks[i]; the function is 0 outside [breaks.front(), breaks.back()).
// Isolated point values override the pieces (e.g. 1_{(0,inf)} at 0).
class PiecewisePoly {
 public:
  struct PointValue {
    double t;
    double value;
  };

  PiecewisePoly() = default;
  PiecewisePoly(std::vector<double> breaks, std::vector<Polynomial> pieces,
                std::vector<PointValue> points = {});

  static PiecewisePoly zero() { return {}; }
  static PiecewisePoly constant(double a, double b, double c);
  // Continuous piecewise-linear interpolant through (x_i, y_i).
  static PiecewisePoly linear_through(std::span<const std::pair<double, double>> nodes);

  double operator()(double t) const;
  double right_limit(double t) const;
  double left_limit(double t) const;

  const std::vector<double>& breaks() const { return breaks_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }
  const std::vector<PointValue>& points() const { return points_; }
  std::size_t max_degree() const;

  // Exact supremum of |f| over w.
  Extremum sup_abs(const Interval& w) const;
  // wa * a + wb * b on the merged breakpoint set.
  static PiecewisePoly combine(const PiecewisePoly& a, double wa, const PiecewisePoly& b, double wb);
  double integral() const;
  // All discontinuity candidates and isolated points.
  std::vector<double> structural_points() const;

 private:
  std::optional<std::size_t> piece_at(double t) const;
  std::vector<double> breaks_;
  std::vector<Polynomial> pieces_;
  std::vector<PointValue> points_;
};

enum class Structure { PiecewisePoly, Closure, Series };

struct SeriesInfo {
  std::uint64_t terms = 0;
  double tail_bound = 0.0;
};

struct Metadata {
  std::vector<Interval> humps;          // disjoint supports, inside the domain
  std::optional<bool> continuous;
  std::vector<double> critical_points;  // extra sample points (argmax hints, kinks)
  bool humps_declared = false;          // humps is authoritative (possibly empty)
};

class FunctionOracle {
 public:
  static FunctionOracle piecewise(Domain domain, PiecewisePoly p, Metadata meta = {});
  static FunctionOracle closure(Domain domain, std::function<double(double)> f, Metadata meta = {});
  static FunctionOracle series(Domain domain, std::function<double(double)> f, SeriesInfo info,
                               Metadata meta = {});
  static FunctionOracle zero(Domain domain);

  double operator()(double t) const;
  const Domain& domain() const;
  Structure structure() const;
  const PiecewisePoly* as_piecewise() const;
  const Metadata& metadata() const;
  const SeriesInfo& series_info() const;

 private:
  struct Impl;
  explicit FunctionOracle(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

enum class Tri { Yes, No, Unknown };
std::string to_string(Tri t);

struct GroundTruth {
  std::optional<FunctionOracle> pointwise_limit;
  Tri sticky = Tri::Unknown;
  Tri locally_uniform = Tri::Unknown;
  Tri limit_continuous = Tri::Unknown;
  std::string provenance;

  // locally_uniform = Yes => sticky = Yes => limit present.
  bool consistent() const;
};

struct SequenceFamily {
  std::string name;
  Domain domain;
  std::function<FunctionOracle(std::uint64_t)> at;
  GroundTruth label;
  std::vector<double> probes;  // structural probe points added to the detector grid
  bool members_continuous = false;

  FunctionOracle operator()(std::uint64_t n) const { return at(n); }
};

struct ResolutionSchedule {
  std::vector<double> eps_ladder;
  std::vector<double> eta_ladder;
  std::uint32_t base_grid = 1024;   // dyadic samples per unit interval
  std::uint64_t n_max = 256;
  std::uint64_t m_max = 1024;
  std::uint32_t window_cap = 4096;  // max samples per neighbourhood check
  double horizon = 16.0;            // working horizon for [0, inf)
  std::uint32_t probe_grid = 2;     // detector probe points per unit interval
  std::uint32_t window_samples = 32;  // samples per window side

  static ResolutionSchedule defaults();
  void validate() const;
  json to_json() const;
  static ResolutionSchedule from_json(const json& j);
};

// Detector probe points on the domain: dyadic probe grid plus extra points.
std::vector<double> probe_points(const Domain& d, const ResolutionSchedule& s,
                                 std::span<const double> extra = {});
// Sampled indices in [lo, hi]: all below 16, then geometric with ratio 2^(1/16).
std::vector<std::uint64_t> sampled_indices(std::uint64_t lo, std::uint64_t hi);

enum class Outcome { Holds, Fails, Inconclusive };
std::string to_string(Outcome o);
Outcome outcome_from_string(const std::string& s);

struct Verdict {
  Outcome outcome = Outcome::Inconclusive;
  json certificate = json::object();
  json witness = json::object();
  ResolutionSchedule schedule;

  bool holds() const { return outcome == Outcome::Holds; }
  bool fails() const { return outcome == Outcome::Fails; }
  json to_json() const;
};

struct WindowSup {
  double value = 0.0;
  double arg = 0.0;
  bool exact = false;
};

// Sup of |f| on w: exact for piecewise polynomials, sampled lower bound otherwise.
WindowSup sup_on_window(const FunctionOracle& f, const Interval& w, const ResolutionSchedule& sched);
// Dyadic grid plus structural breakpoints inside w, coarsened to window_cap.
std::vector<std::pair<double, double>> eval_on_grid(const FunctionOracle& f, const Interval& w,
                                                    const ResolutionSchedule& sched);
// Sample points of a window piece: uniform spacing width/(2*window_samples), plus
// structural points of the given oracles that fall inside.
std::vector<double> window_samples(const Interval& w, const ResolutionSchedule& sched,
                                   std::span<const FunctionOracle* const> oracles);

// Breakpoints, isolated points, critical points and hump edges of f inside w.
std::vector<double> structural_points_in(const FunctionOracle& f, const Interval& w);

// |f - g| for a fixed pair of oracles. The piecewise difference is built once
// so repeated window queries are exact and cheap.
class Gap {
 public:
  Gap(FunctionOracle f, FunctionOracle g);
  double operator()(double s) const;
  bool exact() const { return diff_.has_value(); }
  WindowSup sup(const Interval& w, const ResolutionSchedule& sched) const;
  // Point in w with the largest sampled gap (exact argmax for piecewise pairs).
  const FunctionOracle& first() const { return f_; }
  const FunctionOracle& second() const { return g_; }

 private:
  FunctionOracle f_;
  FunctionOracle g_;
  std::optional<PiecewisePoly> diff_;
};

}  // namespace stickylab
