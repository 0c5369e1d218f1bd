#pragma once

#include <functional>
#include <string>

namespace hardylab {

enum class DensityKind { hyperbolic, euclidean, model, harmonic, damek_ricci };

// Radial volume density f on (0, r_max] with log-derivatives
// f'/f and f''/f. For models f = h^{d−1} and h, h', h'' are also set.
struct DensitySpec {
  DensityKind kind = DensityKind::harmonic;
  int dimension = 0;
  int p = 0;
  int q = 0;
  std::function<long double(long double)> f;
  std::function<long double(long double)> d1_over_f;
  std::function<long double(long double)> d2_over_f;
  std::function<long double(long double)> h;
  std::function<long double(long double)> h1;
  std::function<long double(long double)> h2;
  bool analytic_derivatives = true;
  std::string label;
};

DensitySpec hyperbolic_density(int d);        // sinh^{d−1}
DensitySpec euclidean_density(int d);         // r^{d−1}
DensitySpec damek_ricci_density(int p, int q);  // 2^{p+q} sinh^{p+q}(r/2) cosh^q(r/2)
// f = h^{d−1} with h, h', h'' supplied analytically.
DensitySpec model_density(std::function<long double(long double)> h, std::function<long double(long double)> h1,
                          std::function<long double(long double)> h2, int d, std::string label);
// Harmonic-manifold density given only by f; derivatives by central
// differences with step 1e−5 (truncation O(1e−10) relative, flagged as
// non-analytic).
DensitySpec numeric_density(std::function<long double(long double)> f, std::string label);
// Whitespace-separated "r f" rows on a uniform grid; cubic B-spline
// interpolation supplies f, f', f''.
DensitySpec table_density(const std::string& path);

double weight_hyperbolic(int d, double r);
// 1/(4r²) + (d−1)/4 (2h''/h + (d−3)(h'²−1)/h²) + (d−1)(d−3)/(4h²)
double weight_model(const DensitySpec& spec, int d, double r);
bool check_model_optimality_condition(const DensitySpec& spec, int d, double r);
// 1/(4r²) + ¼(2f''/f − (f'/f)²)
double weight_harmonic(const DensitySpec& spec, double r);
bool check_harmonic_condition(const DensitySpec& spec, double r);
double weight_damek_ricci(int p, int q, double r);

long double weight_harmonic_ld(const DensitySpec& spec, long double r);
long double weight_damek_ricci_ld(int p, int q, long double r);
long double weight_hyperbolic_ld(int d, long double r);

enum class Branch { sqrt_u, sqrt_u_log };

// max over r_min, r_min + h, …, ≤ r_max of |v'' + (f'/f)v' + W v| with
// second-order central differences, v = √(r/f) or √(r/f)·ln r.
double harmonicity_residual(const DensitySpec& spec, const std::function<long double(long double)>& weight,
                            double r_min, double r_max, double h_step, Branch which);

}  // namespace hardylab
