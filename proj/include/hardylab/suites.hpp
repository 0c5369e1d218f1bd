#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hardylab/radial_model.hpp"
#include "hardylab/report.hpp"

namespace hardylab {

struct SuiteOptions {
  double gamma = 0.0;
  std::uint64_t seed = 1;
  std::optional<double> eigen_tol;  // Sturm tolerance for radial checks
};

// Known names: all, hardy, formulas, superharmonic, floor, criticality,
// nullcrit, probe, lambda0, identity, green, properness, oscillation.
const std::vector<std::string>& suite_names();

// Reports sorted by check name. Throws invalid-parameter for an unknown suite.
std::vector<VerificationReport> run_suite(const RadialModel& model, const std::string& suite,
                                          const SuiteOptions& options);

}  // namespace hardylab
