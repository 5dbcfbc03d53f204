#pragma once

// Labelled generators for the function families used throughout the lab.

#include <string>
#include <vector>

#include "stickylab/funcspace.hpp"
#include "stickylab/humps.hpp"

namespace stickylab::catalog {

enum class Kind {
  ScaledBump,
  PerturbedSignal,
  PoissonSeries,
  HaarScaled,
  Spike,
  SpikeSum,
  DirichletKernel,
  IndicatorFront,
  Custom,
};

std::string to_string(Kind k);
Kind kind_from_string(const std::string& s);

// {"kind": "...", "params": {...}}
struct FamilySpec {
  Kind kind = Kind::ScaledBump;
  json params = json::object();

  json to_json() const;
  static FamilySpec from_json(const json& j);
};

// Builds the family and its label. Throws Error naming the violated constraint.
SequenceFamily make_family(const FamilySpec& spec);

struct CatalogEntry {
  std::string name;
  FamilySpec spec;
  GroundTruth label;
};

std::vector<CatalogEntry> catalog_list();
// Built-in by name; throws Error for unknown names.
SequenceFamily builtin(const std::string& name);
bool is_builtin(const std::string& name);

// psi_N(t) = sum_{|n| <= N} xi(n t) on [0, horizon], limit psi_infinity.
SequenceFamily poisson_family(const humps::PoissonInput& in, double horizon = 16.0);
// psi_infinity(t) by direct summation with certified tail.
double poisson_limit_value(const humps::PoissonInput& in, double t);

// Named alpha_n schedules: "n/log(n+2)", "sqrt(n)", "1", "n^p" with p a real.
std::function<double(double)> alpha_schedule(const std::string& rule);

}  // namespace stickylab::catalog
