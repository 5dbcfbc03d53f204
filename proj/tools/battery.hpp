#pragma once

// The acceptance battery. Shared by `stickylab suite` and the acceptance test
// so both report the same checks.

#include <cstdint>
#include <string>
#include <vector>

#include "stickylab/funcspace.hpp"

namespace stickylab::battery {

struct Options {
  std::uint64_t seed = 0;
  ResolutionSchedule sched = ResolutionSchedule::defaults();
};

struct Criterion {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double budget = 0.0;  // seconds, 0 = none
  json detail = json::object();

  // Wall time is left out so the JSON stays reproducible.
  json to_json() const;
};

Criterion lemma_exactness(const Options& opt);
Criterion gliding_hump(const Options& opt);
Criterion poisson_zero(const Options& opt);
Criterion detector_soundness(const Options& opt);
Criterion preservation(const Options& opt);
Criterion compactness(const Options& opt);
Criterion ls_space(const Options& opt);

std::vector<Criterion> run_all(const Options& opt);

}  // namespace stickylab::battery
