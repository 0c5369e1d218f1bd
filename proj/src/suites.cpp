#include "hardylab/suites.hpp"

#include <algorithm>
#include <cmath>

#include "hardylab/error.hpp"
#include "hardylab/greens.hpp"
#include "hardylab/hardy_weights.hpp"
#include "hardylab/optimality.hpp"
#include "hardylab/spectral_ops.hpp"
#include "hardylab/vertex_graph.hpp"

namespace hardylab {

namespace {

constexpr long kDenseVertexLimit = 5000;
constexpr long kForestVertexLimit = 2000000;

VerificationReport base(const std::string& name, const RadialModel& model, const SuiteOptions& opt) {
  VerificationReport rep;
  rep.check = name;
  rep.status = Status::pass;
  rep.params["model"] = model.label();
  rep.params["R"] = static_cast<std::int64_t>(model.depth());
  rep.params["gamma"] = opt.gamma;
  return rep;
}

VerificationReport hardy_check(const RadialModel& model, const SuiteOptions& opt) {
  VerificationReport rep = base("hardy-positivity", model, opt);
  const WeightProfile w = optimal_weight(model, opt.gamma);
  if (!w.admissible) {
    rep.status = Status::hypothesis_not_met;
    rep.notes = w.notes;
  }
  const TridiagonalForm t = hardy_form_matrix(model, w, w.first(), model.depth() - 1);
  const double tol = opt.eigen_tol.value_or(default_eigen_tolerance(t));
  const double lam = smallest_eigenvalue(t, tol);
  rep.params["a"] = static_cast<std::int64_t>(w.first());
  rep.params["b"] = static_cast<std::int64_t>(model.depth() - 1);
  rep.params["eigen_tol"] = tol;
  if (rep.status == Status::pass) rep.require_at_least("smallest_eigenvalue", lam, -1e-10);
  else rep.residuals["smallest_eigenvalue"] = lam;
  return rep;
}

VerificationReport formulas_check(const RadialModel& model, const SuiteOptions& opt) {
  VerificationReport rep = base("formula-equivalence", model, opt);
  const WeightProfile fz = fitzsimmons_weight(model, sqrt_of(u_gamma(model, opt.gamma)));
  const auto* tree = std::get_if<TreeGenerator>(&model.generator());
  const bool use_tree = tree && (opt.gamma == 0 || tree->d >= 2);
  double worst = 0;
  const int top = std::min(model.depth() - 1, 1000);
  for (int r = fz.first(); r <= top; ++r) {
    const double g = general_closed_form(model, opt.gamma, r);
    const double scale = std::max(std::fabs(g), 1e-300);
    worst = std::max(worst, std::fabs(fz.at(r) - g) / scale);
    if (use_tree) worst = std::max(worst, std::fabs(tree_closed_form(tree->d, opt.gamma, r) - g) / scale);
  }
  rep.params["r_max"] = static_cast<std::int64_t>(top);
  rep.params["tree_closed_form"] = use_tree;
  rep.require_at_most("max_relative_difference", worst, 1e-12);
  return rep;
}

VerificationReport floor_check(const RadialModel& model, const SuiteOptions& opt) {
  VerificationReport rep = base("floor-inequality", model, opt);
  if (!floor_preconditions_hold(model) || model.depth() < 3) {
    rep.status = Status::hypothesis_not_met;
    rep.notes.push_back("kappa(1) >= 2 or the u-superharmonicity chain fails");
    return rep;
  }
  double worst = HUGE_VAL;
  for (int r = 2; r < model.depth(); ++r)
    worst = std::min(worst, general_closed_form(model, opt.gamma, r) - weight_floor(model, r));
  rep.require_at_least("min_w_minus_floor", worst, 0.0);
  return rep;
}

VerificationReport criticality_check(const RadialModel& model, const SuiteOptions& opt) {
  VerificationReport rep = base("criticality", model, opt);
  std::vector<long> ns;
  for (long n = 100; n <= model.depth(); n *= 10) ns.push_back(n);
  if (ns.empty()) ns.push_back(std::max(3, model.depth()));
  double worst = 0, min_value = HUGE_VAL;
  long increases = 0;
  double prev = HUGE_VAL;
  for (long n : ns) {
    const CriticalityEnergy e = criticality_energy(model, opt.gamma, n);
    rep.residuals["I(" + std::to_string(n) + ")"] = e.closed_form;
    worst = std::max(worst, e.relative_difference);
    min_value = std::min(min_value, e.closed_form);
    if (!(e.closed_form < prev)) ++increases;
    prev = e.closed_form;
  }
  rep.require_at_most("max_method_rel_difference", worst, 1e-10);
  rep.require_at_least("min_energy", min_value, 1e-300);
  rep.require_at_most("non_decreasing_steps", static_cast<double>(increases), 0);
  return rep;
}

VerificationReport nullcrit_check(const RadialModel& model, const SuiteOptions& opt) {
  VerificationReport rep = base("null-criticality", model, opt);
  const int R = model.depth() - 1;
  if (R < 2) throw Error(ErrorKind::range_out_of_bounds, "model too shallow for null-criticality sums");
  const int R1 = std::max(2, R / 10);
  const NullCriticality small = null_criticality_sum(model, opt.gamma, R1);
  const NullCriticality big = null_criticality_sum(model, opt.gamma, R);
  rep.residuals["sum_R"] = big.sum;
  rep.residuals["sum_R_over_10"] = small.sum;
  rep.require_at_least("growth", big.sum - small.sum, 0.0);
  if (floor_preconditions_hold(model)) {
    rep.require_at_least("floor_part_minus_log_law", big.floor_part - 0.25 * (std::log(R) - std::log(2.0)), -1e-12);
    rep.require_at_least("sum_minus_floor_part", big.sum - big.floor_part, -1e-9 * std::max(1.0, big.sum));
  } else {
    rep.notes.push_back("floor preconditions fail; only monotone growth is checked");
  }
  return rep;
}

std::vector<VerificationReport> probe_checks(const RadialModel& model, const SuiteOptions& opt) {
  const WeightProfile w = optimal_weight(model, opt.gamma);
  const int r_max = model.depth() - 1;
  std::vector<VerificationReport> out;
  for (double lambda : {0.1, 0.0}) {
    const ProbeResult res = optimality_probe(model, w, lambda, 1, r_max);
    VerificationReport rep = to_report(res, lambda, 1, r_max, lambda > 0);
    rep.params["model"] = model.label();
    rep.params["gamma"] = opt.gamma;
    out.push_back(std::move(rep));
  }
  return out;
}

int largest_expansion_depth(const RadialModel& model, int cap, long limit) {
  int best = 0;
  double total = 0;
  for (int r = 0; r <= std::min(cap, model.depth()); ++r) {
    total += model.vol(r).to_double();
    if (total > static_cast<double>(limit)) break;
    best = r;
  }
  return best;
}

VerificationReport lambda0_check(const RadialModel& model, const SuiteOptions& opt) {
  if (!model.has_canonical_realization()) {
    VerificationReport rep = base("lambda0-bound", model, opt);
    rep.status = Status::hypothesis_not_met;
    rep.notes.push_back("no canonical vertex realization");
    return rep;
  }
  const bool tree = std::holds_alternative<TreeGenerator>(model.generator());
  const int depth = largest_expansion_depth(model, 10, tree ? kForestVertexLimit : kDenseVertexLimit);
  VerificationReport rep = lambda0_bound(model, std::max(depth, 1), {10, 100, 1000, 10000}, kForestVertexLimit);
  rep.params["model"] = model.label();
  return rep;
}

VerificationReport identity_check(const RadialModel& model, const SuiteOptions& opt) {
  if (!model.has_canonical_realization()) {
    VerificationReport rep = base("ground-state-identity", model, opt);
    rep.status = Status::hypothesis_not_met;
    rep.notes.push_back("no canonical vertex realization");
    return rep;
  }
  const int depth = std::max(1, largest_expansion_depth(model, 8, 100000));
  const VertexGraph g = expand_vertex_graph(model, depth);
  const std::vector<double> v = radial_to_vertex(g, sqrt_of(u_gamma(model, opt.gamma)));
  VerificationReport rep = ground_state_check(g, v, 100, opt.seed, "ground-state-identity");
  rep.params["model"] = model.label();
  rep.params["gamma"] = opt.gamma;
  rep.params["graph_depth"] = static_cast<std::int64_t>(depth);
  return rep;
}

VerificationReport green_check(const RadialModel& model, const SuiteOptions& opt) {
  try {
    VerificationReport rep = compare_to_green(model);
    rep.params["model"] = model.label();
    return rep;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::no_green_function && e.kind() != ErrorKind::inconclusive) throw;
    VerificationReport rep = base("green-comparison", model, opt);
    rep.status = e.kind() == ErrorKind::no_green_function ? Status::hypothesis_not_met : Status::inconclusive;
    rep.notes.push_back(e.what());
    return rep;
  }
}

VerificationReport oscillation_check(const RadialModel& model, const SuiteOptions& opt) {
  VerificationReport rep = base("bounded-oscillation", model, opt);
  const double sup = bounded_oscillation(model, opt.gamma, model.depth());
  if (const auto* tree = std::get_if<TreeGenerator>(&model.generator())) {
    rep.require_at_most("sup_ratio", sup, 2.0 * tree->d);
  } else {
    rep.residuals["sup_ratio"] = sup;
    if (!std::isfinite(sup)) rep.status = Status::fail;
  }
  return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all",         "hardy",    "formulas", "superharmonic", "floor",
                                                 "criticality", "nullcrit", "probe",    "lambda0",       "identity",
                                                 "green",       "properness", "oscillation"};
  return names;
}

std::vector<VerificationReport> run_suite(const RadialModel& model, const std::string& suite,
                                          const SuiteOptions& opt) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw Error(ErrorKind::invalid_parameter, "unknown suite '" + suite + "'");
  const bool all = suite == "all";
  std::vector<VerificationReport> out;
  auto want = [&](const char* name) { return all || suite == name; };
  if (want("hardy")) out.push_back(hardy_check(model, opt));
  if (want("formulas")) out.push_back(formulas_check(model, opt));
  if (want("superharmonic")) {
    auto a = to_report(check_superharmonic_u(model, opt.gamma), "superharmonic-u", opt.gamma);
    auto b = to_report(check_superharmonic_sqrt_u(model, opt.gamma), "superharmonic-sqrt-u", opt.gamma);
    a.params["model"] = model.label();
    b.params["model"] = model.label();
    out.push_back(std::move(a));
    out.push_back(std::move(b));
  }
  if (want("floor")) out.push_back(floor_check(model, opt));
  if (want("criticality")) out.push_back(criticality_check(model, opt));
  if (want("nullcrit")) out.push_back(nullcrit_check(model, opt));
  if (want("probe"))
    for (auto& rep : probe_checks(model, opt)) out.push_back(std::move(rep));
  if (want("lambda0")) out.push_back(lambda0_check(model, opt));
  if (want("identity")) out.push_back(identity_check(model, opt));
  if (want("green")) out.push_back(green_check(model, opt));
  if (want("properness")) {
    auto rep = properness_proxy(model, opt.gamma);
    rep.params["model"] = model.label();
    out.push_back(std::move(rep));
  }
  if (want("oscillation")) out.push_back(oscillation_check(model, opt));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.check < b.check; });
  for (auto& rep : out) rep.params["seed"] = static_cast<std::int64_t>(opt.seed);
  return out;
}

}  // namespace hardylab
