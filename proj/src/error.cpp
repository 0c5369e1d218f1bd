#include "hardylab/error.hpp"

namespace hardylab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::inconsistent_model: return "inconsistent-model";
    case ErrorKind::no_canonical_realization: return "no-canonical-realization";
    case ErrorKind::size_limit: return "size-limit";
    case ErrorKind::undefined_at_origin: return "undefined-at-origin";
    case ErrorKind::needs_tail: return "needs-tail";
    case ErrorKind::range_out_of_bounds: return "range-out-of-bounds";
    case ErrorKind::not_positive: return "not-positive";
    case ErrorKind::series_divergence_risk: return "series-divergence-risk";
    case ErrorKind::no_green_function: return "no-green-function";
    case ErrorKind::hypothesis_not_met: return "hypothesis-not-met";
    case ErrorKind::inconclusive: return "inconclusive";
    case ErrorKind::dimension_too_small: return "dimension-too-small";
    case ErrorKind::invalid_density: return "invalid-density";
    case ErrorKind::singularity_at_origin: return "singularity-at-origin";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::io_error: return "io-error";
    case ErrorKind::non_finite_report: return "non-finite-report";
  }
  return "unknown";
}

}  // namespace hardylab
