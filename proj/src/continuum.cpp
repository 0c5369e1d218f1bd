#include "hardylab/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>
#include <vector>

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>

#include "hardylab/error.hpp"

namespace hardylab {

namespace {

constexpr long double kNumericStep = 1e-5L;

void check_radius(long double r) {
  if (!(r > 0)) throw Error(ErrorKind::singularity_at_origin, "radius must be > 0");
}

long double coth(long double x) { return std::cosh(x) / std::sinh(x); }

}  // namespace

DensitySpec hyperbolic_density(int d) {
  if (d < 3) throw Error(ErrorKind::dimension_too_small, "hyperbolic space needs d >= 3");
  const long double n = d - 1;
  DensitySpec s;
  s.kind = DensityKind::hyperbolic;
  s.dimension = d;
  s.f = [n](long double r) { return std::pow(std::sinh(r), n); };
  s.d1_over_f = [n](long double r) { return n * coth(r); };
  s.d2_over_f = [n](long double r) {
    const long double c = coth(r);
    return n * (n - 1) * c * c + n;
  };
  s.h = [](long double r) { return std::sinh(r); };
  s.h1 = [](long double r) { return std::cosh(r); };
  s.h2 = [](long double r) { return std::sinh(r); };
  s.label = "hyperbolic:" + std::to_string(d);
  return s;
}

DensitySpec euclidean_density(int d) {
  if (d < 1) throw Error(ErrorKind::dimension_too_small, "dimension must be >= 1");
  const long double n = d - 1;
  DensitySpec s;
  s.kind = DensityKind::euclidean;
  s.dimension = d;
  s.f = [n](long double r) { return std::pow(r, n); };
  s.d1_over_f = [n](long double r) { return n / r; };
  s.d2_over_f = [n](long double r) { return n * (n - 1) / (r * r); };
  s.h = [](long double r) { return r; };
  s.h1 = [](long double) { return 1.0L; };
  s.h2 = [](long double) { return 0.0L; };
  s.label = "euclidean:" + std::to_string(d);
  return s;
}

DensitySpec damek_ricci_density(int p, int q) {
  if (p < 0 || q < 0) throw Error(ErrorKind::invalid_parameter, "p and q must be >= 0");
  if (p + q + 1 < 4) throw Error(ErrorKind::dimension_too_small, "Damek-Ricci spaces need p + q + 1 >= 4");
  const long double pq = p + q, ql = q;
  DensitySpec s;
  s.kind = DensityKind::damek_ricci;
  s.dimension = p + q + 1;
  s.p = p;
  s.q = q;
  s.f = [pq, ql](long double r) {
    return std::pow(2.0L, pq) * std::pow(std::sinh(r / 2), pq) * std::pow(std::cosh(r / 2), ql);
  };
  auto l1 = [pq, ql](long double r) { return pq / 2 * coth(r / 2) + ql / 2 * std::tanh(r / 2); };
  s.d1_over_f = l1;
  s.d2_over_f = [pq, ql, l1](long double r) {
    const long double sh = std::sinh(r / 2), ch = std::cosh(r / 2);
    const long double dl1 = -pq / (4 * sh * sh) + ql / (4 * ch * ch);
    const long double v = l1(r);
    return dl1 + v * v;
  };
  s.label = "dr:" + std::to_string(p) + ":" + std::to_string(q);
  return s;
}

DensitySpec model_density(std::function<long double(long double)> h, std::function<long double(long double)> h1,
                          std::function<long double(long double)> h2, int d, std::string label) {
  if (d < 3) throw Error(ErrorKind::dimension_too_small, "models need d >= 3");
  const long double n = d - 1;
  DensitySpec s;
  s.kind = DensityKind::model;
  s.dimension = d;
  s.h = h;
  s.h1 = h1;
  s.h2 = h2;
  s.f = [h, n](long double r) { return std::pow(h(r), n); };
  s.d1_over_f = [h, h1, n](long double r) { return n * h1(r) / h(r); };
  s.d2_over_f = [h, h1, h2, n](long double r) {
    const long double g = h1(r) / h(r);
    return n * (n - 1) * g * g + n * h2(r) / h(r);
  };
  s.label = std::move(label);
  return s;
}

DensitySpec numeric_density(std::function<long double(long double)> f, std::string label) {
  DensitySpec s;
  s.kind = DensityKind::harmonic;
  s.analytic_derivatives = false;
  s.f = f;
  s.d1_over_f = [f](long double r) {
    const long double e = kNumericStep;
    return (f(r + e) - f(r - e)) / (2 * e) / f(r);
  };
  s.d2_over_f = [f](long double r) {
    const long double e = kNumericStep;
    return (f(r + e) - 2 * f(r) + f(r - e)) / (e * e) / f(r);
  };
  s.label = std::move(label);
  return s;
}

DensitySpec table_density(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io_error, "cannot open density table '" + path + "'");
  std::vector<double> r, f;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    double a, b;
    if (!(row >> a)) continue;
    if (!(row >> b)) throw Error(ErrorKind::parse_error, "density table rows need 'r f'");
    if (!(b > 0)) throw Error(ErrorKind::invalid_density, "density must be positive");
    r.push_back(a);
    f.push_back(b);
  }
  if (r.size() < 5) throw Error(ErrorKind::parse_error, "density table needs at least 5 rows");
  const double step = (r.back() - r.front()) / static_cast<double>(r.size() - 1);
  for (std::size_t i = 1; i < r.size(); ++i)
    if (std::fabs(r[i] - r[i - 1] - step) > 1e-9 * std::max(1.0, std::fabs(step)))
      throw Error(ErrorKind::parse_error, "density table grid must be uniform");
  if (!(r.front() > 0)) throw Error(ErrorKind::singularity_at_origin, "density table must start at r > 0");
  using Spline = boost::math::interpolators::cardinal_cubic_b_spline<double>;
  auto spline = std::make_shared<Spline>(f.begin(), f.end(), r.front(), step);
  const double lo = r.front(), hi = r.back();
  auto guard = [lo, hi](long double x) {
    if (x < lo || x > hi) throw Error(ErrorKind::range_out_of_bounds, "radius outside the density table");
    return static_cast<double>(x);
  };
  DensitySpec s;
  s.kind = DensityKind::harmonic;
  s.analytic_derivatives = false;
  s.f = [spline, guard](long double x) { return static_cast<long double>((*spline)(guard(x))); };
  s.d1_over_f = [spline, guard](long double x) {
    const double y = guard(x);
    return static_cast<long double>(spline->prime(y) / (*spline)(y));
  };
  s.d2_over_f = [spline, guard](long double x) {
    const double y = guard(x);
    return static_cast<long double>(spline->double_prime(y) / (*spline)(y));
  };
  s.label = "table:" + path;
  return s;
}

long double weight_hyperbolic_ld(int d, long double r) {
  if (d < 3) throw Error(ErrorKind::dimension_too_small, "weight_hyperbolic needs d >= 3");
  check_radius(r);
  const long double n = d - 1;
  const long double sh = std::sinh(r);
  return n * n / 4 + 1 / (4 * r * r) + n * (d - 3) / (4 * sh * sh);
}

double weight_hyperbolic(int d, double r) { return static_cast<double>(weight_hyperbolic_ld(d, r)); }

double weight_model(const DensitySpec& spec, int d, double r) {
  if (d < 3) throw Error(ErrorKind::dimension_too_small, "weight_model needs d >= 3");
  if (!spec.h) throw Error(ErrorKind::invalid_density, "density has no model profile h");
  check_radius(r);
  const long double rl = r;
  const long double h = spec.h(rl), h1 = spec.h1(rl), h2 = spec.h2(rl);
  if (!(h > 0)) throw Error(ErrorKind::invalid_density, "h must be positive");
  const long double n = d - 1, m = d - 3;
  const long double w = 1 / (4 * rl * rl) + n / 4 * (2 * h2 / h + m * (h1 * h1 - 1) / (h * h)) + n * m / (4 * h * h);
  return static_cast<double>(w);
}

bool check_model_optimality_condition(const DensitySpec& spec, int d, double r) {
  if (!spec.h) throw Error(ErrorKind::invalid_density, "density has no model profile h");
  check_radius(r);
  const long double h = spec.h(r), h1 = spec.h1(r), h2 = spec.h2(r);
  if (!(h > 0)) throw Error(ErrorKind::invalid_density, "h must be positive");
  return 2 * h * h2 >= -(d - 3) * h1 * h1;
}

long double weight_harmonic_ld(const DensitySpec& spec, long double r) {
  check_radius(r);
  if (!(spec.f(r) > 0)) throw Error(ErrorKind::invalid_density, "density must be positive");
  const long double l1 = spec.d1_over_f(r);
  const long double l2 = spec.d2_over_f(r);
  return 1 / (4 * r * r) + (2 * l2 - l1 * l1) / 4;
}

double weight_harmonic(const DensitySpec& spec, double r) { return static_cast<double>(weight_harmonic_ld(spec, r)); }

bool check_harmonic_condition(const DensitySpec& spec, double r) {
  check_radius(r);
  if (!(spec.f(r) > 0)) throw Error(ErrorKind::invalid_density, "density must be positive");
  const long double l1 = spec.d1_over_f(r);
  return 2 * spec.d2_over_f(r) >= l1 * l1;
}

long double weight_damek_ricci_ld(int p, int q, long double r) {
  if (p + q + 1 < 4) throw Error(ErrorKind::dimension_too_small, "Damek-Ricci spaces need p + q + 1 >= 4");
  check_radius(r);
  const long double a = p + 2 * q;
  const long double sh2 = std::sinh(r / 2), sh = std::sinh(r);
  return a * a / 16 + 1 / (4 * r * r) + static_cast<long double>(p) * (p + 2 * q - 2) / (16 * sh2 * sh2) +
         static_cast<long double>(q) * (q - 2) / (4 * sh * sh);
}

double weight_damek_ricci(int p, int q, double r) { return static_cast<double>(weight_damek_ricci_ld(p, q, r)); }

double harmonicity_residual(const DensitySpec& spec, const std::function<long double(long double)>& weight,
                            double r_min, double r_max, double h_step, Branch which) {
  if (!(h_step > 0) || !(r_max > r_min)) throw Error(ErrorKind::invalid_parameter, "need h > 0 and r_min < r_max");
  if (!(r_min - h_step > 0)) throw Error(ErrorKind::singularity_at_origin, "grid stencil touches r = 0");
  const long double h = h_step;
  auto v = [&](long double r) {
    const long double base = std::sqrt(r / spec.f(r));
    return which == Branch::sqrt_u ? base : base * std::log(r);
  };
  const long n = static_cast<long>(std::floor((r_max - r_min) / h_step + 1e-9));
  long double worst = 0;
  for (long i = 0; i <= n; ++i) {
    const long double r = r_min + i * h;
    const long double vm = v(r - h), v0 = v(r), vp = v(r + h);
    const long double d2 = (vp - 2 * v0 + vm) / (h * h);
    const long double d1 = (vp - vm) / (2 * h);
    worst = std::max(worst, std::fabs(d2 + spec.d1_over_f(r) * d1 + weight(r) * v0));
  }
  return static_cast<double>(worst);
}

}  // namespace hardylab
