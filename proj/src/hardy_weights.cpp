#include "hardylab/hardy_weights.hpp"

#include <cmath>
#include <stdexcept>

#include "hardylab/error.hpp"

namespace hardylab {

std::string to_string(WeightOrigin origin) {
  switch (origin) {
    case WeightOrigin::fitzsimmons: return "fitzsimmons";
    case WeightOrigin::tree_closed_form: return "tree-closed-form";
    case WeightOrigin::general_closed_form: return "general-closed-form";
    case WeightOrigin::series: return "series";
    case WeightOrigin::green_fitzsimmons: return "green-fitzsimmons";
    case WeightOrigin::constant: return "constant";
  }
  return "constant";
}

double WeightProfile::at(int r) const {
  if (!covers(r)) throw Error(ErrorKind::range_out_of_bounds, "weight undefined at radius " + std::to_string(r), r);
  return values[r - start];
}

WeightProfile WeightProfile::scaled(double factor) const {
  WeightProfile w = *this;
  for (double& v : w.values) v *= factor;
  return w;
}

namespace {

// 2 − √(1−x) − √(1+x) without cancellation.
quad two_minus_roots(quad x) {
  const quad a = qm::sqrt(1 - x);
  const quad b = qm::sqrt(1 + x);
  return 2 * x * x / ((1 + a) * (1 + b) * (a + b));
}

// (√κ − 1)² without cancellation near κ = 1.
quad sqrt_minus_one_sq(quad kappa) {
  const quad s = qm::sqrt(kappa);
  return (kappa - 1) * (kappa - 1) / ((s + 1) * (s + 1));
}

quad guarded_sqrt(quad x, int r) {
  if (x < 0) throw Error(ErrorKind::not_positive, "negative radicand", r);
  return qm::sqrt(x);
}

void check_gamma(double gamma) {
  if (!(gamma >= 0) || !std::isfinite(gamma)) throw Error(ErrorKind::invalid_parameter, "gamma must be >= 0");
}

const char* kCoefficientNote =
    "w_gamma(1) uses 2 - sqrt(2) - sqrt(gamma) (the value of the Fitzsimmons ratio); "
    "the variant 2 - 2 sqrt(2) - sqrt(gamma) would put w_gamma(1) below lambda_0 for every gamma";
const char* kIntervalNote =
    "gamma admissibility uses the u and sqrt(u) superharmonicity bounds, "
    "not the d-independent endpoint (2 - 2 sqrt(2))^2";

}  // namespace

RadialFunction u_gamma(const RadialModel& model, double gamma) {
  check_gamma(gamma);
  RadialFunction u;
  u.values.resize(model.depth() + 1);
  u.values[0] = WideReal(gamma);
  for (int r = 1; r <= model.depth(); ++r) u.values[r] = WideReal(r) / model.area(r);
  return u;
}

RadialFunction sqrt_of(const RadialFunction& v) {
  RadialFunction s;
  s.values.reserve(v.values.size());
  for (const auto& x : v.values) s.values.push_back(x.sqrt());
  return s;
}

WeightProfile fitzsimmons_weight(const RadialModel& model, const RadialFunction& v) {
  if (v.depth() < model.depth()) throw Error(ErrorKind::range_out_of_bounds, "function shorter than the model");
  if (v(0).is_negative()) throw Error(ErrorKind::not_positive, "v(0) < 0", 0);
  for (int r = 1; r <= model.depth(); ++r)
    if (!v(r).is_positive()) throw Error(ErrorKind::not_positive, "v must be positive for r >= 1", r);
  WeightProfile w;
  w.start = v(0).is_zero() ? 1 : 0;
  w.gamma = v(0).to_double();
  w.origin = WeightOrigin::fitzsimmons;
  w.admissible = true;
  for (int r = w.start; r < model.depth(); ++r) {
    quad val = static_cast<quad>(model.k_plus(r)) * (1 - ratio(v(r + 1), v(r)));
    if (r > 0) val += static_cast<quad>(model.k_minus(r)) * (1 - ratio(v(r - 1), v(r)));
    const double d = static_cast<double>(val);
    if (d < 0) w.admissible = false;
    w.values.push_back(d);
  }
  return w;
}

quad tree_closed_form_q(int d, double gamma, int r) {
  check_gamma(gamma);
  if (d < 1) throw Error(ErrorKind::invalid_parameter, "d must be >= 1");
  if (gamma > 0 && d < 2) throw Error(ErrorKind::invalid_parameter, "gamma > 0 needs d >= 2");
  if (r < 0) throw Error(ErrorKind::range_out_of_bounds, "negative radius", r);
  const quad sd = qm::sqrt(static_cast<quad>(d));
  const quad g = gamma;
  if (r == 0) {
    if (gamma == 0) throw Error(ErrorKind::undefined_at_origin, "w_0 is defined for r >= 1 only", 0);
    return d - sd / qm::sqrt(g);
  }
  const quad floor = sqrt_minus_one_sq(d);
  if (r == 1) return floor + sd * (2 - qm::sqrt(static_cast<quad>(2)) - qm::sqrt(g));
  return floor + sd * two_minus_roots(static_cast<quad>(1) / r);
}

double tree_closed_form(int d, double gamma, int r) { return static_cast<double>(tree_closed_form_q(d, gamma, r)); }

quad general_closed_form_q(const RadialModel& model, double gamma, int r) {
  check_gamma(gamma);
  if (r < 0 || r > model.depth() - 1)
    throw Error(ErrorKind::range_out_of_bounds, "closed form needs 0 <= r <= R-1", r);
  if (r == 0) {
    if (gamma == 0) throw Error(ErrorKind::undefined_at_origin, "w_0 is defined for r >= 1 only", 0);
    const quad kp0 = model.k_plus(0);
    const quad a1 = model.area(1).to_quad();
    return kp0 * (1 - 1 / guarded_sqrt(a1 * static_cast<quad>(gamma), 0));
  }
  const quad km = model.k_minus(r);
  const quad k = model.kappa_q(r);
  if (r == 1) {
    const quad a1 = model.area(1).to_quad();
    return km * (1 + k - guarded_sqrt(2 * k, 1) - guarded_sqrt(a1 * static_cast<quad>(gamma), 1));
  }
  const quad kprev = model.kappa_q(r - 1);
  const quad x = static_cast<quad>(1) / r;
  const quad sk = qm::sqrt(k);
  const quad sp = qm::sqrt(kprev);
  // 1 + κ − √κ√(1+x) − √κ'√(1−x), regrouped so that the κ = κ' case matches
  // the stable tree form.
  const quad a = qm::sqrt(1 - x);
  const quad value = sqrt_minus_one_sq(k) + sk * two_minus_roots(x) + (k - kprev) / (sk + sp) * a;
  return km * value;
}

double general_closed_form(const RadialModel& model, double gamma, int r) {
  return static_cast<double>(general_closed_form_q(model, gamma, r));
}

WeightProfile optimal_weight(const RadialModel& model, double gamma) {
  check_gamma(gamma);
  WeightProfile w;
  w.start = gamma == 0 ? 1 : 0;
  w.gamma = gamma;
  w.origin = WeightOrigin::general_closed_form;
  w.admissible = true;
  for (int r = w.start; r < model.depth(); ++r) {
    const double v = general_closed_form(model, gamma, r);
    if (!(v >= 0)) w.admissible = false;
    w.values.push_back(v);
  }
  bool constant = true;
  for (int r = 2; r < model.depth() && constant; ++r)
    constant = model.kappa(r) == model.kappa(1) && model.k_minus(r) == model.k_minus(1);
  if (constant && model.kappa(1) >= 1)
    w.poincare_floor = static_cast<double>(model.k_minus(1) * sqrt_minus_one_sq(model.kappa_q(1)));
  const auto sq = check_superharmonic_sqrt_u(model, gamma);
  if (!sq.ok()) {
    w.admissible = false;
    w.notes.push_back("sqrt(u_gamma) is not superharmonic on the stored range; the weight is not certified");
  }
  if (std::holds_alternative<TreeGenerator>(model.generator())) {
    w.notes.push_back(kCoefficientNote);
    if (gamma > 0) w.notes.push_back(kIntervalNote);
  }
  if (!floor_preconditions_hold(model))
    w.notes.push_back("precondition-not-checked: kappa(1) >= 2 or the u-superharmonicity chain fails; "
                      "the floor column is not a guaranteed lower bound");
  return w;
}

double series_expansion(int d, int r, int n_max) {
  if (r < 2) throw Error(ErrorKind::series_divergence_risk, "series needs r >= 2", r);
  if (n_max < 4 || n_max % 2 != 0) throw Error(ErrorKind::invalid_parameter, "n_max must be even and >= 4");
  if (d < 1) throw Error(ErrorKind::invalid_parameter, "d must be >= 1");
  const quad sd = qm::sqrt(static_cast<quad>(d));
  // c(n) = C(2n,n)/(2^{2n}(2n−1)) satisfies c(n) = c(n−1)(2n−3)/(2n).
  quad c = 0.5Q;
  quad sum = 0;
  quad power = 1;
  const quad x = static_cast<quad>(1) / r;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) c *= static_cast<quad>(2 * n - 3) / (2 * n);
    power *= x;
    if (n % 2 == 0) sum += c * power;
  }
  return static_cast<double>(sqrt_minus_one_sq(d) + 2 * sd * sum);
}

double series_first_omitted_term(int d, int r, int n_max) {
  if (r < 2) throw Error(ErrorKind::series_divergence_risk, "series needs r >= 2", r);
  const int m = n_max + 2;
  quad c = 0.5Q;
  for (int n = 2; n <= m; ++n) c *= static_cast<quad>(2 * n - 3) / (2 * n);
  const quad sd = qm::sqrt(static_cast<quad>(d));
  return static_cast<double>(2 * sd * c * qm::pow(static_cast<quad>(r), -m));
}

GammaInterval gamma_interval_u(const RadialModel& model) {
  const double a1 = model.k_plus(0) * model.vol(0).to_double();
  return {1.0 / a1, (model.kappa(1) - 1.0) / a1};
}

GammaInterval gamma_interval_sqrt_u(const RadialModel& model) {
  const double a1 = model.k_plus(0) * model.vol(0).to_double();
  const quad k = model.kappa_q(1);
  const quad top = 1 + k - qm::sqrt(2 * k);
  return {1.0 / a1, static_cast<double>(top * top / a1)};
}

namespace {

constexpr std::size_t kMaxReportedRadii = 16;

bool in_interval(const GammaInterval& iv, double g) {
  const double slack = 1e-14 * std::max(1.0, std::fabs(g));
  return g >= iv.lower - slack && g <= iv.upper + slack;
}

}  // namespace

SuperharmonicCheck check_superharmonic_u(const RadialModel& model, double gamma) {
  check_gamma(gamma);
  SuperharmonicCheck out;
  for (int r = 2; r < model.depth(); ++r) {
    // r k₊(r) k₋(r−1) ≥ k₋(r) k₋(r−1) + (r−1) k₊(r−1) k₋(r), exact for integer data.
    const quad kp = model.k_plus(r), km = model.k_minus(r);
    const quad kp1 = model.k_plus(r - 1), km1 = model.k_minus(r - 1);
    const quad lhs = r * kp * km1;
    const quad rhs = km * km1 + (r - 1) * kp1 * km;
    const quad slack = 1e-30Q * rhs;
    if (lhs < rhs - slack) {
      out.radial_ok = false;
      if (out.failing_radii.size() < kMaxReportedRadii) out.failing_radii.push_back(r);
    } else if (lhs <= rhs + slack) {
      ++out.equality_radii;
    }
  }
  if (gamma > 0) {
    out.gamma_checked = true;
    out.interval = gamma_interval_u(model);
    out.gamma_ok = in_interval(out.interval, gamma);
  }
  return out;
}

SuperharmonicCheck check_superharmonic_sqrt_u(const RadialModel& model, double gamma) {
  check_gamma(gamma);
  SuperharmonicCheck out;
  for (int r = 2; r < model.depth(); ++r) {
    const quad k = model.kappa_q(r);
    const quad kprev = model.kappa_q(r - 1);
    const quad x = static_cast<quad>(1) / r;
    const quad top = 1 + k - qm::sqrt(k * (1 + x));
    const quad lhs = kprev * (1 - x);
    const quad rhs = top * top;
    const quad slack = 1e-28Q * rhs;
    if (lhs > rhs + slack) {
      out.radial_ok = false;
      if (out.failing_radii.size() < kMaxReportedRadii) out.failing_radii.push_back(r);
    } else if (lhs >= rhs - slack) {
      ++out.equality_radii;
    }
  }
  if (gamma > 0) {
    out.gamma_checked = true;
    out.interval = gamma_interval_sqrt_u(model);
    out.gamma_ok = in_interval(out.interval, gamma);
  }
  return out;
}

VerificationReport to_report(const SuperharmonicCheck& check, const std::string& name, double gamma) {
  VerificationReport rep;
  rep.check = name;
  rep.status = check.ok() ? Status::pass : Status::hypothesis_not_met;
  rep.params["gamma"] = gamma;
  rep.residuals["failing_radii"] = static_cast<double>(check.failing_radii.size());
  rep.residuals["equality_radii"] = check.equality_radii;
  if (check.gamma_checked) {
    rep.params["gamma_lower"] = check.interval.lower;
    rep.params["gamma_upper"] = check.interval.upper;
    rep.params["gamma_in_interval"] = check.gamma_ok;
    if (check.interval.lower > check.interval.upper) rep.notes.push_back("gamma interval is empty");
  } else {
    rep.notes.push_back("gamma = 0: punctured domain, no root condition");
  }
  for (int r : check.failing_radii) rep.notes.push_back("condition fails at r = " + std::to_string(r));
  return rep;
}

double weight_floor(const RadialModel& model, int r) {
  if (r < 2 || r > model.depth() - 1) throw Error(ErrorKind::range_out_of_bounds, "floor needs 2 <= r <= R-1", r);
  const quad k = model.kappa_q(r);
  const quad value = sqrt_minus_one_sq(k) + qm::sqrt(k) / (4 * static_cast<quad>(r) * r);
  return static_cast<double>(model.k_minus(r) * value);
}

bool floor_preconditions_hold(const RadialModel& model) {
  return model.kappa(1) >= 2 && check_superharmonic_u(model, 0).radial_ok;
}

}  // namespace hardylab
