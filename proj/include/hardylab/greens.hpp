#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hardylab/radial_model.hpp"
#include "hardylab/report.hpp"
#include "hardylab/weight_profile.hpp"

namespace hardylab {

using BigRational = boost::multiprecision::cpp_rational;

enum class Transience { transient, recurrent, inconclusive };

struct TransienceResult {
  Transience verdict = Transience::inconclusive;
  std::string method;
};

std::string to_string(Transience t);

// Convergence of Σ 1/area(n). Exact for geometric tails and for the
// tree / polynomial anti-tree generators; a growth heuristic otherwise.
TransienceResult transience_test(const RadialModel& model);
// Throws inconclusive when the heuristic cannot decide.
bool is_transient(const RadialModel& model);

enum class TailMethod { closed_form_geometric, closed_form_telescoping, truncated_with_bound };

std::string to_string(TailMethod m);

// G(r) = Σ_{n>r} 1/area(n) for r = 0..R. tail_error_bound bounds the
// absolute error of the tail Σ_{n>R} 1/area(n) (it shifts every G(r)).
struct GreenProfile {
  std::vector<WideReal> values;
  TailMethod tail_method = TailMethod::truncated_with_bound;
  double tail_error_bound = 0.0;
  std::vector<std::string> notes;
};

GreenProfile green_function(const RadialModel& model);
// Exact G(0..R) in rational arithmetic when both the areas and the tail are
// known exactly (trees with d ≥ 2, anti-tree s(r) = r+1).
std::optional<std::vector<BigRational>> exact_green(const RadialModel& model);

// w_G(r) = (−Δ√G)(r)/√G(r) for 1 ≤ r ≤ R−1.
WeightProfile green_fitzsimmons(const RadialModel& model);
WeightProfile green_fitzsimmons(const RadialModel& model, const GreenProfile& green);

struct GreenRow {
  int r = 0;
  WideReal G;
  double w_green = 0.0;
  double w0 = 0.0;
  double margin = 0.0;
};

std::vector<GreenRow> green_table(const RadialModel& model);

// w₀(r) > w_G(r) from the constancy radius of κ on, against the closed-form
// margin k₋√κ(2 − √(1+1/r) − √(1−1/r)).
VerificationReport compare_to_green(const RadialModel& model);

}  // namespace hardylab
