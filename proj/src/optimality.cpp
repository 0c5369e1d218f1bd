#include "hardylab/optimality.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hardylab/error.hpp"
#include "hardylab/greens.hpp"
#include "hardylab/hardy_weights.hpp"
#include "hardylab/vertex_spectrum.hpp"

namespace hardylab {

double ground_state_identity(const VertexGraph& graph, std::span<const double> v, std::span<const double> phi) {
  const int n = graph.size();
  std::vector<double> f(n);
  for (int x = 0; x < n; ++x) {
    if (v[x] < 0) throw Error(ErrorKind::not_positive, "v must be nonnegative", x);
    if (v[x] == 0 && phi[x] != 0) throw Error(ErrorKind::not_positive, "phi must vanish where v does", x);
    f[x] = v[x] * phi[x];
  }
  double weighted = 0;
  for (int x = 0; x < n; ++x) {
    if (v[x] == 0) continue;
    const double w = vertex_laplacian(graph, v, x) / v[x];
    weighted += w * f[x] * f[x] * graph.measure(x);
  }
  const double lhs = vertex_energy(graph, f) - weighted;
  double rhs = 0;
  for (const Edge& e : graph.edges()) {
    const double d = phi[e.x] - phi[e.y];
    rhs += e.b * v[e.x] * v[e.y] * d * d;
  }
  return std::fabs(lhs - rhs) / std::max(1.0, std::fabs(lhs));
}

std::vector<double> radial_to_vertex(const VertexGraph& graph, const RadialFunction& f) {
  std::vector<double> out(graph.size());
  for (int x = 0; x < graph.size(); ++x) out[x] = f(graph.sphere(x)).to_double();
  return out;
}

VerificationReport ground_state_check(const VertexGraph& graph, std::span<const double> v, int count,
                                      std::uint64_t seed, const std::string& name) {
  VerificationReport rep;
  rep.check = name;
  rep.status = Status::pass;
  rep.params["seed"] = static_cast<std::int64_t>(seed);
  rep.params["samples"] = static_cast<std::int64_t>(count);
  rep.params["vertices"] = static_cast<std::int64_t>(graph.size());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<double> phi(graph.size());
  double worst = 0;
  for (int k = 0; k < count; ++k) {
    for (int x = 0; x < graph.size(); ++x) phi[x] = v[x] > 0 ? uni(rng) : 0.0;
    worst = std::max(worst, ground_state_identity(graph, v, phi));
  }
  rep.require_at_most("max_residual", worst, 1e-11);
  return rep;
}

namespace {

// κ(r), continued by a geometric tail beyond the stored depth.
quad kappa_ext(const RadialModel& model, long r) {
  if (r < model.depth()) return model.kappa_q(static_cast<int>(r));
  if (model.tail().kind == TailKind::eventually_geometric) return model.tail().kappa_inf;
  throw Error(ErrorKind::needs_tail, "kappa beyond the stored depth", r);
}

}  // namespace

double criticality_closed_form(const RadialModel& model, long n) {
  if (n < 2) throw Error(ErrorKind::invalid_parameter, "n must be >= 2");
  quad sum = 0;
  for (long r = 1; r < n; ++r) {
    const quad l = qm::log1p(static_cast<quad>(1) / r);
    sum += qm::sqrt(kappa_ext(model, r) * static_cast<quad>(r) * (r + 1)) * l * l;
  }
  const quad ln = qm::log(static_cast<quad>(n));
  return static_cast<double>(sum / (ln * ln));
}

CriticalityEnergy criticality_energy(const RadialModel& model, double gamma, long n) {
  if (n < 3) throw Error(ErrorKind::invalid_parameter, "n must be >= 3");
  if (n > model.depth()) throw Error(ErrorKind::needs_tail, "n exceeds the model depth", n);
  const int N = static_cast<int>(n);
  const quad ln = qm::log(static_cast<quad>(n));
  const RadialFunction s = sqrt_of(u_gamma(model, gamma));
  std::vector<WideReal> e(N + 1);
  e[0] = s(0);
  for (int r = 1; r <= N; ++r) e[r] = s(r) * WideReal(1 - qm::log(static_cast<quad>(r)) / ln);
  e[N] = WideReal();
  WideReal energy;
  for (int r = 0; r < N; ++r) {
    const WideReal d = e[r + 1] - e[r];
    energy += model.area(r + 1) * d * d;
  }
  WideReal weighted;
  for (int r = gamma == 0 ? 1 : 0; r < N; ++r)
    weighted += WideReal(general_closed_form_q(model, gamma, r)) * e[r] * e[r] * model.vol(r);
  CriticalityEnergy out;
  out.direct = (energy - weighted).to_double();
  out.closed_form = criticality_closed_form(model, n);
  out.relative_difference = std::fabs(out.direct - out.closed_form) / std::fabs(out.closed_form);
  return out;
}

HelperSumDecay helper_sum_decay(const std::vector<long>& n_list) {
  HelperSumDecay out;
  quad sum = 0;
  long r = 1;
  double prev = HUGE_VAL;
  for (long n : n_list) {
    if (n < 2 || n < r) throw Error(ErrorKind::invalid_parameter, "n_list must be increasing and >= 2");
    for (; r < n; ++r) {
      const quad l = qm::log1p(static_cast<quad>(1) / r);
      sum += l * l * qm::sqrt(static_cast<quad>(r) * (r + 1));
    }
    const quad ln = qm::log(static_cast<quad>(n));
    const double v = static_cast<double>(sum / (ln * ln));
    out.values.push_back(v);
    if (n >= 100) {
      out.fitted_c = std::max(out.fitted_c, v * static_cast<double>(ln));
      if (prev != HUGE_VAL && !(v < prev)) out.decreasing_beyond_100 = false;
      prev = v;
    }
  }
  return out;
}

NullCriticality null_criticality_sum(const RadialModel& model, double gamma, int R, int first) {
  if (R > model.depth() - 1 || R < first) throw Error(ErrorKind::range_out_of_bounds, "need first <= R <= depth-1", R);
  if (first < 1 && gamma == 0) throw Error(ErrorKind::undefined_at_origin, "w_0 is defined for r >= 1 only", 0);
  quad sum = 0, floor = 0;
  for (int r = first; r <= R; ++r) {
    // u(r)·vol(r) = r/k₋(r)
    const quad uv = r == 0 ? static_cast<quad>(gamma) * model.vol(0).to_quad() : r / static_cast<quad>(model.k_minus(r));
    sum += uv * general_closed_form_q(model, gamma, r);
    if (r >= 1) floor += qm::sqrt(model.kappa_q(r)) / (4 * static_cast<quad>(r));
  }
  return {static_cast<double>(sum), static_cast<double>(floor)};
}

ProbeResult optimality_probe(const RadialModel& model, const WeightProfile& w, double lambda, int k_radius,
                             int r_max) {
  if (!(lambda >= 0)) throw Error(ErrorKind::invalid_parameter, "lambda must be >= 0");
  const int a = k_radius + 1;
  const int b_max = std::min({r_max, model.depth() - 1, w.last()});
  if (b_max < a) throw Error(ErrorKind::range_out_of_bounds, "no annulus fits below R_max", b_max);
  const TridiagonalForm t = hardy_form_matrix(model, w, a, b_max, 1.0 + lambda);
  ProbeResult out;
  auto negative = [&](int b) {
    ++out.evaluations;
    return eigenvalues_below(t, 0.0, b - a + 1) > 0;
  };
  int good = a - 1;  // largest b known to be nonnegative
  int bad = -1;
  for (long step = 1;; step *= 2) {
    const int b = static_cast<int>(std::min<long>(a + step - 1, b_max));
    if (negative(b)) {
      bad = b;
      break;
    }
    good = b;
    if (b == b_max) break;
  }
  out.b_max = good > bad ? good : bad;
  if (bad < 0) {
    out.status = ProbeStatus::not_refuted;
    out.b_max = b_max;
    TridiagonalForm whole = t;
    out.eigenvalue_at_end = smallest_eigenvalue(whole);
    return out;
  }
  while (bad - good > 1) {
    const int mid = good + (bad - good) / 2;
    if (negative(mid)) bad = mid;
    else good = mid;
  }
  out.status = ProbeStatus::refuted;
  out.first_failing_b = bad;
  out.b_max = bad;
  TridiagonalForm head = t;
  head.diagonal.resize(bad - a + 1);
  head.offdiagonal.resize(bad - a);
  head.mass.resize(bad - a + 1);
  head.b = bad;
  out.eigenvalue_at_end = smallest_eigenvalue(head);
  return out;
}

VerificationReport to_report(const ProbeResult& result, double lambda, int k_radius, int r_max, bool expect_refuted) {
  VerificationReport rep;
  rep.check = lambda > 0 ? "optimality-probe" : "optimality-probe-control";
  rep.params["lambda"] = lambda;
  rep.params["K_radius"] = static_cast<std::int64_t>(k_radius);
  rep.params["R_max"] = static_cast<std::int64_t>(r_max);
  rep.params["outcome"] = std::string(result.status == ProbeStatus::refuted ? "refuted" : "not-refuted-up-to-R_max");
  rep.params["b_examined"] = static_cast<std::int64_t>(result.b_max);
  rep.residuals["first_failing_b"] = result.first_failing_b;
  rep.residuals["smallest_eigenvalue"] = result.eigenvalue_at_end;
  rep.residuals["evaluations"] = result.evaluations;
  const bool refuted = result.status == ProbeStatus::refuted;
  if (expect_refuted) {
    rep.status = refuted ? Status::pass : Status::inconclusive;
    if (!refuted) rep.notes.push_back("no negative eigenvalue up to R_max; budget exhausted, optimality not witnessed");
  } else {
    rep.status = refuted ? Status::fail : Status::pass;
  }
  return rep;
}

double bounded_oscillation(const RadialModel& model, double gamma, int R) {
  if (R < 2 || R > model.depth()) throw Error(ErrorKind::range_out_of_bounds, "need 2 <= R <= depth", R);
  const RadialFunction u = u_gamma(model, gamma);
  quad sup = 0;
  for (int r = 1; r < R; ++r) {
    const quad q = ratio(u(r), u(r + 1));
    sup = std::max({sup, q, 1 / q});
  }
  return static_cast<double>(sup);
}

VerificationReport properness_proxy(const RadialModel& model, double gamma) {
  VerificationReport rep;
  rep.check = "properness";
  rep.params["gamma"] = gamma;
  const auto t = transience_test(model);
  rep.params["transience"] = to_string(t.verdict) + " (" + t.method + ")";
  if (t.verdict != Transience::transient) {
    rep.status = Status::hypothesis_not_met;
    rep.notes.push_back("model is not known to be transient");
    return rep;
  }
  const int R = model.depth();
  const RadialFunction u = u_gamma(model, gamma);
  int start = R;
  while (start - 1 >= 1 && u(start - 1) > u(start)) --start;
  rep.status = Status::pass;
  rep.residuals["decreasing_from"] = start;
  rep.require_at_most("decreasing_from_over_R", static_cast<double>(start) / R, 0.5);
  const quad drop = ratio(u(R), u(start));
  rep.require_at_most("u_R_over_u_start", static_cast<double>(drop), 0.5);
  const WideReal top = u(start);
  for (int k = 1; k <= 8; ++k) {
    const WideReal threshold = top * WideReal(std::pow(10.0, -k));
    int last = 0;
    for (int r = 1; r <= R; ++r)
      if (u(r) > threshold) last = r;
    rep.params["last_radius_above_1e-" + std::to_string(k)] = static_cast<std::int64_t>(last);
  }
  return rep;
}

VerificationReport lambda0_bound(const RadialModel& model, int r_vertex, const std::vector<int>& radial_depths,
                                 long max_vertices) {
  VerificationReport rep;
  rep.check = "lambda0-bound";
  const int R = model.depth();
  bool constant = true;
  for (int r = 2; r < R && constant; ++r)
    constant = model.kappa(r) == model.kappa(1) && model.k_minus(r) == model.k_minus(1);
  constant = constant && model.k_minus(R) == model.k_minus(1);
  if (!constant) {
    rep.status = Status::hypothesis_not_met;
    rep.notes.push_back("kappa and k_minus are not constant");
    return rep;
  }
  const double k = model.kappa(1);
  const double km = model.k_minus(1);
  const double shift = k >= 1 ? km * (std::sqrt(k) - 1) * (std::sqrt(k) - 1) : 0.0;
  rep.status = Status::pass;
  rep.params["shift"] = shift;
  rep.params["R_vertex"] = static_cast<std::int64_t>(r_vertex);

  const VertexGraph g = expand_vertex_graph(model, r_vertex, max_vertices);
  const VertexForm form = vertex_dirichlet_form(g, [&](int) { return shift; }, false);
  const PsdCheck psd = check_psd(form, 1e-9);
  rep.params["vertices"] = static_cast<std::int64_t>(g.size());
  rep.params["psd_method"] = psd.method;
  if (psd.method == "dense") rep.require_at_least("vertex_min_eigenvalue", psd.min_eigenvalue, -1e-9);
  else rep.require_at_most("vertex_negative_count", static_cast<double>(psd.negative_count), 0);

  double prev = HUGE_VAL;
  long increases = 0;
  double lowest = HUGE_VAL;
  for (int depth : radial_depths) {
    if (depth > R - 1) continue;
    const double lam = smallest_eigenvalue(shifted_laplacian_matrix(model, 0.0, 0, depth), 1e-13);
    rep.residuals["radial_bottom_R" + std::to_string(depth)] = lam;
    if (lam > prev + 1e-12) ++increases;
    prev = lam;
    lowest = std::min(lowest, lam);
  }
  rep.require_at_most("radial_increases", static_cast<double>(increases), 0);
  if (lowest != HUGE_VAL) rep.require_at_least("radial_bottom_minus_shift", lowest - shift, -1e-9);
  return rep;
}

}  // namespace hardylab
