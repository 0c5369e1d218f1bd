#pragma once

#include <string>
#include <vector>

namespace hardylab {

enum class WeightOrigin { fitzsimmons, tree_closed_form, general_closed_form, series, green_fitzsimmons, constant };

std::string to_string(WeightOrigin origin);

// Candidate Hardy weight w(r) for r = start .. start + values.size() − 1.
// start is 1 when γ = 0 (punctured domain), 0 otherwise.
struct WeightProfile {
  std::vector<double> values;
  int start = 0;
  double gamma = 0.0;
  WeightOrigin origin = WeightOrigin::constant;
  bool admissible = false;
  double poincare_floor = 0.0;
  std::vector<std::string> notes;

  int first() const { return start; }
  int last() const { return start + static_cast<int>(values.size()) - 1; }
  bool covers(int r) const { return r >= first() && r <= last(); }
  // Throws range-out-of-bounds outside [first, last].
  double at(int r) const;
  WeightProfile scaled(double factor) const;
};

}  // namespace hardylab
