#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hardylab {

enum class ErrorKind {
  invalid_parameter,
  inconsistent_model,
  no_canonical_realization,
  size_limit,
  undefined_at_origin,
  needs_tail,
  range_out_of_bounds,
  not_positive,
  series_divergence_risk,
  no_green_function,
  hypothesis_not_met,
  inconclusive,
  dimension_too_small,
  invalid_density,
  singularity_at_origin,
  parse_error,
  io_error,
  non_finite_report,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type; `kind()` is the
// machine-readable discriminator, `radius()` is set when a specific sphere
// index is at fault.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::optional<long> radius = std::nullopt)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), radius_(radius) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<long> radius() const noexcept { return radius_; }

 private:
  ErrorKind kind_;
  std::optional<long> radius_;
};

}  // namespace hardylab
