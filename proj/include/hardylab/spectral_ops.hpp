#pragma once

#include <optional>
#include <vector>

#include "hardylab/radial_model.hpp"
#include "hardylab/weight_profile.hpp"

namespace hardylab {

// Real sequence v(0..R) with v(−1) = 0.
struct RadialFunction {
  std::vector<WideReal> values;

  RadialFunction() = default;
  explicit RadialFunction(std::vector<WideReal> v) : values(std::move(v)) {}
  static RadialFunction from_doubles(const std::vector<double>& v);

  int depth() const { return static_cast<int>(values.size()) - 1; }
  // v(r) for −1 ≤ r ≤ depth.
  WideReal operator()(int r) const;
};

// (−Δv)(r) = k₊(r)(v(r) − v(r+1)) + k₋(r)(v(r) − v(r−1)), 0 ≤ r ≤ R−1.
WideReal radial_laplacian(const RadialModel& model, const RadialFunction& v, int r);

// E(φ) = Σ_r area(r+1)(φ(r+1) − φ(r))² for φ vanishing outside spheres < R.
WideReal radial_energy(const RadialModel& model, const RadialFunction& phi);

// Symmetric tridiagonal matrix acting on ψ(r) = φ(r)√vol(r), r ∈ [a, b].
struct TridiagonalForm {
  std::vector<double> diagonal;
  std::vector<double> offdiagonal;
  int a = 0;
  int b = 0;
  std::vector<WideReal> mass;

  int size() const { return static_cast<int>(diagonal.size()); }
  // Bounds of the Gershgorin interval.
  double gershgorin_lower() const;
  double gershgorin_upper() const;
  double gershgorin_radius() const;
};

// E(φ) − Σ_r scale·w(r)φ(r)² vol(r) over radial φ supported on [a, b], with
// Dirichlet conditions outside. Requires w to cover [a, b] and b ≤ R−1.
TridiagonalForm hardy_form_matrix(const RadialModel& model, const WeightProfile& w, int a, int b,
                                  double scale = 1.0);
// Radial Dirichlet form of −Δ − shift on spheres [a, b].
TridiagonalForm shifted_laplacian_matrix(const RadialModel& model, double shift, int a, int b);

// Number of eigenvalues strictly below x (Sturm count), of the leading
// principal block of the given size (whole matrix when negative).
int eigenvalues_below(const TridiagonalForm& t, double x, int leading = -1);
// 1e−11 times the Gershgorin radius.
double default_eigen_tolerance(const TridiagonalForm& t);
// Smallest eigenvalue to within tol, by Sturm bisection inside the Gershgorin
// interval. tol defaults to default_eigen_tolerance(t).
double smallest_eigenvalue(const TridiagonalForm& t, std::optional<double> tol = std::nullopt);

}  // namespace hardylab
