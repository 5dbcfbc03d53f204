#pragma once

// Functionals that sticky convergence preserves: limsup/liminf along a time
// sequence, up-crossing counts, pointwise regularity predicates, and series
// transfer rules.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stickylab/funcspace.hpp"

namespace stickylab::functionals {

struct TimeSequence {
  std::string name;
  std::function<double(std::uint64_t)> term;  // k -> t_k, k >= 1
  double limit = 0.0;
  std::uint64_t k_max = 4096;
  std::uint64_t tail_window = 1024;

  // t_k = limit + offset / k (offset < 0 approaches from the left).
  static TimeSequence reciprocal(double limit, double offset = 1.0);
  // t_k = limit + offset * 2^{-k/64}.
  static TimeSequence geometric(double limit, double offset = 1.0);
  // Throws unless |t_k - limit| decreases over (k_max/2, k_max].
  void validate() const;
  json to_json() const;
};

// Sequences that approach t from the right (and from the left when t > lo).
std::vector<TimeSequence> builtin_time_sequences(const Domain& d, double t);

struct LimsupResult {
  double S = 0.0;  // limsup estimate: max over the tail window
  double I = 0.0;  // liminf estimate: min over the tail window
  bool exact = false;
  json to_json() const;
};

LimsupResult limsup_along(const FunctionOracle& f, const TimeSequence& tau);

// Two-state strict scan (seek f < a, then f > b). Exact for piecewise
// polynomials, a lower bound on sampled oracles.
std::uint64_t upcrossings(const FunctionOracle& f, double a, double b, const Interval& w,
                          const ResolutionSchedule& sched);

enum class PropertyKind { ContinuousAt, RightContinuousAt, LeftLimitAt, Cadlag, LocallyBounded, LowerSC, UpperSC };

struct Property {
  PropertyKind kind = PropertyKind::ContinuousAt;
  double t = 0.0;  // unused by Cadlag and LocallyBounded

  static Property continuous_at(double t) { return {PropertyKind::ContinuousAt, t}; }
  static Property right_continuous_at(double t) { return {PropertyKind::RightContinuousAt, t}; }
  static Property left_limit_at(double t) { return {PropertyKind::LeftLimitAt, t}; }
  static Property cadlag() { return {PropertyKind::Cadlag, 0.0}; }
  static Property locally_bounded() { return {PropertyKind::LocallyBounded, 0.0}; }
  static Property lower_sc(double t) { return {PropertyKind::LowerSC, t}; }
  static Property upper_sc(double t) { return {PropertyKind::UpperSC, t}; }

  std::string name() const;
  json to_json() const;
};

Verdict check_property(const FunctionOracle& f, const Property& p, const ResolutionSchedule& sched);

struct SeriesMode {
  enum class Kind { NormalConvergence, Abel, Domination };
  Kind kind = Kind::NormalConvergence;
  std::optional<SequenceFamily> eps_fam;  // Abel weights eps_n
  std::optional<SequenceFamily> ref_fam;  // Domination reference f_n
  double K = 1.0;                         // Domination constant
  std::uint64_t N = 0;                    // Domination index threshold

  static SeriesMode normal() { return {}; }
  static SeriesMode abel(SequenceFamily eps) { return {Kind::Abel, std::move(eps), std::nullopt, 1.0, 0}; }
  static SeriesMode domination(SequenceFamily ref, double K, std::uint64_t N) {
    return {Kind::Domination, std::nullopt, std::move(ref), K, N};
  }
};

// Checks the mode's hypotheses at resolution, then verifies the conclusion:
// the transformed family passes sticky_cauchy and its limit candidate passes
// ContinuousAt at every probe point.
Verdict series_transfer(const SequenceFamily& fam, const SeriesMode& mode, const ResolutionSchedule& sched);

}  // namespace stickylab::functionals
