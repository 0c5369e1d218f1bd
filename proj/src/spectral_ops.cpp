#include "hardylab/spectral_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hardylab/error.hpp"

namespace hardylab {

RadialFunction RadialFunction::from_doubles(const std::vector<double>& v) {
  RadialFunction f;
  f.values.assign(v.begin(), v.end());
  return f;
}

WideReal RadialFunction::operator()(int r) const {
  if (r == -1) return {};
  if (r < -1 || r > depth())
    throw Error(ErrorKind::range_out_of_bounds, "radial function index " + std::to_string(r), r);
  return values[r];
}

WideReal radial_laplacian(const RadialModel& model, const RadialFunction& v, int r) {
  if (r == model.depth()) throw Error(ErrorKind::needs_tail, "(-Δv)(R) depends on v(R+1)", r);
  if (r < 0 || r > model.depth() - 1 || r + 1 > v.depth())
    throw Error(ErrorKind::range_out_of_bounds, "radial Laplacian index " + std::to_string(r), r);
  const WideReal vr = v(r);
  WideReal out = WideReal(model.k_plus(r)) * (vr - v(r + 1));
  if (r > 0) out += WideReal(model.k_minus(r)) * (vr - v(r - 1));
  return out;
}

WideReal radial_energy(const RadialModel& model, const RadialFunction& phi) {
  const int R = model.depth();
  if (phi.depth() > R) throw Error(ErrorKind::range_out_of_bounds, "function longer than the model", phi.depth());
  if (phi.depth() == R && !phi(R).is_zero())
    throw Error(ErrorKind::needs_tail, "support reaches sphere R; the edge to R+1 is not stored", R);
  WideReal sum;
  const int top = std::min(phi.depth(), R - 1);
  for (int r = 0; r <= top; ++r) {
    const WideReal next = r + 1 <= phi.depth() ? phi(r + 1) : WideReal();
    const WideReal diff = next - phi(r);
    if (!diff.is_zero()) sum += model.area(r + 1) * diff * diff;
  }
  return sum;
}

double TridiagonalForm::gershgorin_lower() const {
  double lo = std::numeric_limits<double>::infinity();
  for (int i = 0; i < size(); ++i) {
    double rad = 0;
    if (i > 0) rad += std::fabs(offdiagonal[i - 1]);
    if (i + 1 < size()) rad += std::fabs(offdiagonal[i]);
    lo = std::min(lo, diagonal[i] - rad);
  }
  return lo;
}

double TridiagonalForm::gershgorin_upper() const {
  double hi = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < size(); ++i) {
    double rad = 0;
    if (i > 0) rad += std::fabs(offdiagonal[i - 1]);
    if (i + 1 < size()) rad += std::fabs(offdiagonal[i]);
    hi = std::max(hi, diagonal[i] + rad);
  }
  return hi;
}

double TridiagonalForm::gershgorin_radius() const {
  return std::max(std::fabs(gershgorin_lower()), std::fabs(gershgorin_upper()));
}

namespace {

void check_range(const RadialModel& model, int a, int b) {
  if (a < 0 || b < a || b > model.depth() - 1)
    throw Error(ErrorKind::range_out_of_bounds,
                "Dirichlet range [" + std::to_string(a) + ", " + std::to_string(b) + "] must lie in [0, R-1]", b);
}

TridiagonalForm laplacian_part(const RadialModel& model, int a, int b) {
  TridiagonalForm t;
  t.a = a;
  t.b = b;
  const int n = b - a + 1;
  t.diagonal.resize(n);
  t.offdiagonal.resize(n - 1);
  t.mass.resize(n);
  for (int r = a; r <= b; ++r) {
    t.diagonal[r - a] = model.k_plus(r) + model.k_minus(r);
    t.mass[r - a] = model.vol(r);
    if (r < b) t.offdiagonal[r - a] = -std::sqrt(model.k_plus(r) * model.k_minus(r + 1));
  }
  return t;
}

}  // namespace

TridiagonalForm hardy_form_matrix(const RadialModel& model, const WeightProfile& w, int a, int b, double scale) {
  check_range(model, a, b);
  if (!w.covers(a) || !w.covers(b))
    throw Error(ErrorKind::range_out_of_bounds, "weight does not cover the Dirichlet range", a);
  TridiagonalForm t = laplacian_part(model, a, b);
  for (int r = a; r <= b; ++r) t.diagonal[r - a] -= scale * w.at(r);
  return t;
}

TridiagonalForm shifted_laplacian_matrix(const RadialModel& model, double shift, int a, int b) {
  check_range(model, a, b);
  TridiagonalForm t = laplacian_part(model, a, b);
  for (double& d : t.diagonal) d -= shift;
  return t;
}

int eigenvalues_below(const TridiagonalForm& t, double x, int leading) {
  const long double pivmin = std::numeric_limits<long double>::min() * 1e4L;
  const int n = leading < 0 ? t.size() : std::min(leading, t.size());
  int count = 0;
  long double q = 1;
  for (int i = 0; i < n; ++i) {
    const long double e2 = i > 0 ? static_cast<long double>(t.offdiagonal[i - 1]) * t.offdiagonal[i - 1] : 0.0L;
    q = static_cast<long double>(t.diagonal[i]) - x - (i > 0 ? e2 / q : 0.0L);
    if (std::fabs(q) < pivmin) q = -pivmin;
    if (q < 0) ++count;
  }
  return count;
}

double default_eigen_tolerance(const TridiagonalForm& t) { return 1e-11 * std::max(t.gershgorin_radius(), 1e-300); }

double smallest_eigenvalue(const TridiagonalForm& t, std::optional<double> tol) {
  if (t.size() == 0) throw Error(ErrorKind::invalid_parameter, "empty matrix");
  const double eps = tol.value_or(default_eigen_tolerance(t));
  if (!(eps > 0)) throw Error(ErrorKind::invalid_parameter, "tolerance must be positive");
  double lo = t.gershgorin_lower();
  double hi = t.gershgorin_upper();
  if (t.size() == 1) return t.diagonal[0];
  while (hi - lo > eps) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (eigenvalues_below(t, mid) >= 1) hi = mid;
    else lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace hardylab
