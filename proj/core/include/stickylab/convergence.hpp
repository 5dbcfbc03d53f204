#pragma once

// Resolution-bounded detectors for neighbourhood membership and for pointwise,
// sticky and locally uniform convergence of sequence families.
//
// Every detector works on a finite skeleton: probe points t, the eps ladder,
// the eta ladder and the sampled indices in [1, 2 n_max]. For each (t, eps)
// the per-index gaps are classified as
//   resolved    - no violation from some N <= n_max on,
//   decaying    - violations remain but the gap median shrinks (ratio < 0.75)
//                 between (n_max/4, n_max/2] and (n_max, 2 n_max],
//   persistent  - violation density >= 1/2 up to n_max and up to 2 n_max and
//                 the gap does not shrink; this is the "infinitely many n" proxy,
//   undecided   - anything else.
// A persistent rung makes the verdict Fails, an undecided one Inconclusive.

#include <cstdint>
#include <vector>

#include "stickylab/funcspace.hpp"

namespace stickylab::convergence {

struct NeighbourhoodSpec {
  FunctionOracle base;
  std::vector<double> points;
  double epsilon = 0.0;
};

Verdict neighbourhood_contains(const NeighbourhoodSpec& nbhd, const FunctionOracle& g,
                               const ResolutionSchedule& sched);

Verdict detect_pointwise(const SequenceFamily& fam, const FunctionOracle& limit, const ResolutionSchedule& sched);
Verdict detect_sticky(const SequenceFamily& fam, const FunctionOracle& limit, const ResolutionSchedule& sched);
// Only eta >= 4 / n_max is admissible: a fixed window must see indices well
// beyond its own scale for "for all n >= N" to mean anything.
Verdict detect_locally_uniform(const SequenceFamily& fam, const FunctionOracle& limit,
                               const ResolutionSchedule& sched);
// Limit-free criterion with (N, eta, M) order and M chosen per sample point s.
// ScaleAdaptive: M_s = max(m_max, 2^ceil(log2(2048 / s))) capped at 2^44, for
// families that move on the scale 1/n. Fixed: M_s = m_max (partial sums).
// Tail probes are m in {M_s, 2 M_s, 4 M_s}.
enum class CauchyTail { ScaleAdaptive, Fixed };
Verdict sticky_cauchy(const SequenceFamily& fam, const ResolutionSchedule& sched,
                      CauchyTail tail = CauchyTail::ScaleAdaptive);

// fam members must declare the supports of f_n - g_n through metadata humps.
Verdict eventual_equality_transfer(const SequenceFamily& fam, const SequenceFamily& ref,
                                   const FunctionOracle& ref_limit, const ResolutionSchedule& sched);

// Re-evaluates a verdict against the oracles it was computed from: Holds
// certificates must still hold, Fails witnesses must still violate.
bool replay(const Verdict& v, const SequenceFamily& fam, const FunctionOracle* limit);
bool replay(const Verdict& v, const NeighbourhoodSpec& nbhd, const FunctionOracle& g);

// Largest sampled window gap sup |f - g| over (t - eta, t + eta) intersected
// with the domain. Shared by the detectors and by replay.
double window_gap(const Gap& gap, const Domain& d, double t, double eta, const ResolutionSchedule& sched);

}  // namespace stickylab::convergence
