#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "battery.hpp"
#include "stickylab/funcspace.hpp"
#include "stickylab/report.hpp"

namespace stickylab::cli {

// Bad flags, unknown names, unreadable inputs: exit status 3.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Result {
  Outcome outcome = Outcome::Holds;
  json body = json::object();
  std::optional<report::Table> table;
};

int exit_code(Outcome o);

// Built-in name, or a path to a {"kind", "params"} spec when it ends in .json.
SequenceFamily resolve_family(const std::string& ref);

Result analyze(const std::string& family, const std::string& mode, const ResolutionSchedule& sched);
Result catalog();
Result lemma(std::uint64_t k, std::uint64_t n, double alpha, double t0);
Result banach_steinhaus(std::size_t i_max, const std::vector<std::uint64_t>& ns, const std::string& alpha);
Result poisson(const std::string& xi, const std::vector<double>& s, bool detectors, const ResolutionSchedule& sched);
Result dirichlet(const std::vector<std::uint64_t>& ns);

// A family member f_n, or the family's limit when n is empty.
struct Target {
  std::string family;
  std::optional<std::uint64_t> n;
};
Result upcrossings(const Target& target, double a, double b, const std::vector<double>& window,
                   const ResolutionSchedule& sched);
Result limsup(const Target& target, double t, const std::string& tau, const ResolutionSchedule& sched);
Result property(const Target& target, const std::string& kind, double t, const ResolutionSchedule& sched);

// Either a built-in double sequence, or sigma_ij = f_i(t_j) for a family.
Result cluster(const std::string& family, const std::string& double_name, const std::string& tau, double t,
               std::uint64_t box, double eps);
Result compactness(const std::string& family, const ResolutionSchedule& sched);
Result ls_norm(const std::string& input, std::optional<std::uint64_t> unit);
Result suite(const battery::Options& opt);

}  // namespace stickylab::cli
