#pragma once

#include <vector>

#include "hardylab/radial_model.hpp"
#include "hardylab/report.hpp"
#include "hardylab/spectral_ops.hpp"
#include "hardylab/weight_profile.hpp"

namespace hardylab {

// u(0) = γ, u(r) = r/area(r).
RadialFunction u_gamma(const RadialModel& model, double gamma);
RadialFunction sqrt_of(const RadialFunction& v);

// w = (−Δv)/v on 1..R−1, plus r = 0 when v(0) > 0.
WeightProfile fitzsimmons_weight(const RadialModel& model, const RadialFunction& v);

// Closed forms of (−Δ√u_γ)/√u_γ. The r = 1 tree value uses the coefficient
// 2 − √2 − √γ.
quad tree_closed_form_q(int d, double gamma, int r);
double tree_closed_form(int d, double gamma, int r);
quad general_closed_form_q(const RadialModel& model, double gamma, int r);
double general_closed_form(const RadialModel& model, double gamma, int r);

// Profile of the general closed form on [γ = 0 ? 1 : 0, R−1] with
// admissibility flags and notes.
WeightProfile optimal_weight(const RadialModel& model, double gamma);

// (√d−1)² + √d/(4r²) + 2√d Σ_{n=4,6,…,n_max} C(2n,n)/(2^{2n}(2n−1)) r^{−n}.
double series_expansion(int d, int r, int n_max);
// The n = n_max + 2 term of the same series.
double series_first_omitted_term(int d, int r, int n_max);

struct GammaInterval {
  double lower = 0.0;
  double upper = 0.0;
  bool contains(double g) const { return g >= lower && g <= upper; }
};

// [1/(k₊(0)vol(0)), (κ(1)−1)/(k₊(0)vol(0))]
GammaInterval gamma_interval_u(const RadialModel& model);
// [1/(k₊(0)vol(0)), (1+κ(1)−√(2κ(1)))²/(k₊(0)vol(0))]
GammaInterval gamma_interval_sqrt_u(const RadialModel& model);

struct SuperharmonicCheck {
  bool radial_ok = true;             // r ≥ 2 condition at every stored radius
  std::vector<int> failing_radii;    // first few offenders
  int equality_radii = 0;            // radii where the condition is an equality
  bool gamma_checked = false;        // false for γ = 0
  GammaInterval interval;
  bool gamma_ok = true;
  bool ok() const { return radial_ok && gamma_ok; }
};

// κ(r) ≥ 1/r + (1−1/r)κ(r−1) for 2 ≤ r ≤ R−1, and γ in gamma_interval_u.
SuperharmonicCheck check_superharmonic_u(const RadialModel& model, double gamma);
// κ(r−1) ≤ (1+κ(r)−√(κ(r)(1+1/r)))²/(1−1/r), and γ in gamma_interval_sqrt_u.
SuperharmonicCheck check_superharmonic_sqrt_u(const RadialModel& model, double gamma);
VerificationReport to_report(const SuperharmonicCheck& check, const std::string& name, double gamma);

// k₋(r)((√κ(r)−1)² + √κ(r)/(4r²)), r ≥ 2.
double weight_floor(const RadialModel& model, int r);
// κ(1) ≥ 2 and the √u chain hold, which is what the floor bound needs.
bool floor_preconditions_hold(const RadialModel& model);

}  // namespace hardylab
