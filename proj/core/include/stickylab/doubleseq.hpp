#pragma once

// Double sequences sigma_ij and compactness diagnostics for function families.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stickylab/funcspace.hpp"
#include "stickylab/functionals.hpp"

namespace stickylab::doubleseq {

struct DoubleSequenceOracle {
  std::string name;
  std::function<double(std::uint64_t, std::uint64_t)> at;  // (i, j), both >= 1
  std::uint64_t i_max = 256;
  std::uint64_t j_max = 256;

  double operator()(std::uint64_t i, std::uint64_t j) const { return at(i, j); }
  void validate() const;
  DoubleSequenceOracle doubled() const;
};

// "Infinitely many" becomes a count over early rows that meet the ball in the
// far half of the columns (and symmetrically for columns).
struct ClusterPolicy {
  double eps = 0.05;
  std::uint64_t row_count_min = 8;
  std::uint64_t col_count_min = 8;
  std::uint64_t rows_min = 8;
  std::uint64_t cols_min = 8;
  void validate() const;
};

struct ClusterCandidate {
  double value = 0.0;
  std::vector<std::uint64_t> rows;
  std::vector<std::uint64_t> cols;
  json to_json() const;
};

// Rows i <= i_max/4 with >= row_count_min entries in (y - eps, y + eps) among
// j in (j_max/2, j_max], and the column analogue.
ClusterCandidate cluster_evidence(const DoubleSequenceOracle& sigma, double y, const ClusterPolicy& policy);
bool qualifies(const DoubleSequenceOracle& sigma, double y, const ClusterPolicy& policy);

// Candidates that qualify in the box and still have a qualifying candidate
// within eps after the box is doubled.
std::vector<ClusterCandidate> double_cluster_candidates(const DoubleSequenceOracle& sigma, const ClusterPolicy& policy);

// Verdict certificate carries "L" (median of the edge region) on Holds.
Verdict flat_on_edges(const DoubleSequenceOracle& sigma, const std::function<std::uint64_t(std::uint64_t)>& kappa,
                      double tol);

struct BuiltinDouble {
  DoubleSequenceOracle sigma;
  std::function<std::uint64_t(std::uint64_t)> kappa;
  double tol = 0.05;
};
std::vector<BuiltinDouble> builtin_double_sequences();

// sigma_ij = f_i(t_j).
DoubleSequenceOracle from_family(const SequenceFamily& fam, const functionals::TimeSequence& tau,
                                 std::uint64_t box = 256);

struct HumpModulus {
  double rho = 0.0;
  std::uint64_t excluded_prefix = 0;       // indices 1..excluded_prefix are dropped
  std::vector<std::uint64_t> outliers;     // further dropped indices (none at present)
  json to_json() const;
};

// Windowed limsup of |f_n(s) - f_n(t)| over n in (n_max, 2 n_max].
HumpModulus hump_modulus(const SequenceFamily& fam, double s, double t, const ResolutionSchedule& sched);

Verdict compactness_diagnostic(const SequenceFamily& fam, const ResolutionSchedule& sched);

}  // namespace stickylab::doubleseq
