#include "hardylab/greens.hpp"

#include <algorithm>
#include <cmath>

#include "hardylab/error.hpp"
#include "hardylab/hardy_weights.hpp"

namespace hardylab {

std::string to_string(Transience t) {
  switch (t) {
    case Transience::transient: return "transient";
    case Transience::recurrent: return "recurrent";
    case Transience::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string to_string(TailMethod m) {
  switch (m) {
    case TailMethod::closed_form_geometric: return "closed-form-geometric";
    case TailMethod::closed_form_telescoping: return "closed-form-telescoping";
    case TailMethod::truncated_with_bound: return "truncated-with-bound";
  }
  return "truncated-with-bound";
}

namespace {

std::optional<int> poly_power(const RadialModel& model) {
  if (const auto* anti = std::get_if<AntitreeGenerator>(&model.generator())) return anti->poly_power;
  return std::nullopt;
}

// Smallest area ratio area(r+1)/area(r) over [from, R−1].
quad min_area_ratio(const RadialModel& model, int from) {
  quad q = HUGE_VAL;
  for (int r = std::max(from, 1); r < model.depth(); ++r) q = std::min(q, ratio(model.area(r + 1), model.area(r)));
  return q;
}

}  // namespace

TransienceResult transience_test(const RadialModel& model) {
  const Tail& tail = model.tail();
  if (tail.kind == TailKind::eventually_geometric) return {Transience::transient, "eventually-geometric tail"};
  if (tail.kind == TailKind::finite) return {Transience::recurrent, "finite graph"};
  if (const auto* tree = std::get_if<TreeGenerator>(&model.generator()))
    return {tree->d >= 2 ? Transience::transient : Transience::recurrent, "tree area d^n"};
  if (const auto p = poly_power(model))
    return {*p >= 1 ? Transience::transient : Transience::recurrent, "anti-tree area n^p (n+1)^p"};
  // Heuristic on the stored second half.
  const int R = model.depth();
  const int half = std::max(1, R / 2);
  if (min_area_ratio(model, half) >= 1.01Q) return {Transience::transient, "heuristic: geometric growth >= 1.01"};
  bool at_most_linear = true;
  for (int r = half; r <= R && at_most_linear; ++r)
    at_most_linear = ratio(model.area(r), WideReal(r)) <= 1.0001Q * ratio(model.area(half), WideReal(half));
  if (at_most_linear) return {Transience::recurrent, "heuristic: area grows at most linearly"};
  return {Transience::inconclusive, "heuristic: growth neither geometric nor at most linear"};
}

bool is_transient(const RadialModel& model) {
  const auto t = transience_test(model);
  if (t.verdict == Transience::inconclusive) throw Error(ErrorKind::inconclusive, "transience undecided: " + t.method);
  return t.verdict == Transience::transient;
}

GreenProfile green_function(const RadialModel& model) {
  const auto t = transience_test(model);
  if (t.verdict == Transience::recurrent)
    throw Error(ErrorKind::no_green_function, "recurrent model (" + t.method + ")");
  if (t.verdict == Transience::inconclusive) throw Error(ErrorKind::inconclusive, "transience undecided: " + t.method);

  const int R = model.depth();
  GreenProfile g;
  WideReal tail;
  const Tail& desc = model.tail();
  std::optional<int> p = poly_power(model);
  if (desc.kind == TailKind::eventually_geometric) {
    g.tail_method = TailMethod::closed_form_geometric;
    tail = WideReal(1) / (model.area(R) * WideReal(desc.kappa_inf - 1.0));
  } else if (p && *p == 1) {
    g.tail_method = TailMethod::closed_form_telescoping;
    tail = WideReal(1) / WideReal(R + 1);
  } else if (p) {
    // (R+2)^{1−2p}/(2p−1) ≤ Σ_{n>R} 1/(n(n+1))^p ≤ R^{1−2p}/(2p−1).
    g.tail_method = TailMethod::truncated_with_bound;
    const quad e = 1 - 2 * static_cast<quad>(*p);
    const quad hi = qm::pow(R, e) / (2 * *p - 1);
    const quad lo = qm::pow(R + 2, e) / (2 * *p - 1);
    tail = WideReal((hi + lo) / 2);
    g.tail_error_bound = static_cast<double>((hi - lo) / 2);
  } else {
    g.tail_method = TailMethod::truncated_with_bound;
    const quad q = min_area_ratio(model, std::max(1, 3 * R / 4));
    tail = WideReal(1) / (model.area(R) * WideReal(q - 1));
    g.tail_error_bound = tail.to_double();
    g.notes.push_back("tail extrapolated geometrically from the stored data; bound is heuristic");
  }
  g.values.resize(R + 1);
  g.values[R] = tail;
  for (int r = R - 1; r >= 0; --r) g.values[r] = g.values[r + 1] + WideReal(1) / model.area(r + 1);
  return g;
}

std::optional<std::vector<BigRational>> exact_green(const RadialModel& model) {
  const int R = model.depth();
  BigRational tail;
  if (const auto* tree = std::get_if<TreeGenerator>(&model.generator()); tree && tree->d >= 2) {
    tail = BigRational(1, *model.exact_area(R) * (tree->d - 1));
  } else if (poly_power(model) == 1) {
    tail = BigRational(1, R + 1);
  } else {
    return std::nullopt;
  }
  std::vector<BigRational> g(R + 1);
  g[R] = tail;
  for (int r = R - 1; r >= 0; --r) g[r] = g[r + 1] + BigRational(1, *model.exact_area(r + 1));
  return g;
}

namespace {

std::vector<quad> green_weight_q(const RadialModel& model, const std::vector<WideReal>& G) {
  std::vector<quad> w;
  for (int r = 1; r < model.depth(); ++r) {
    const quad up = qm::sqrt(ratio(G[r + 1], G[r]));
    const quad down = qm::sqrt(ratio(G[r - 1], G[r]));
    w.push_back(static_cast<quad>(model.k_plus(r)) * (1 - up) + static_cast<quad>(model.k_minus(r)) * (1 - down));
  }
  return w;
}

std::vector<WideReal> shifted(const std::vector<WideReal>& G, double delta) {
  std::vector<WideReal> out = G;
  for (auto& g : out) g += WideReal(delta);
  return out;
}

}  // namespace

WeightProfile green_fitzsimmons(const RadialModel& model, const GreenProfile& green) {
  WeightProfile w;
  w.start = 1;
  w.origin = WeightOrigin::green_fitzsimmons;
  w.admissible = true;
  for (quad v : green_weight_q(model, green.values)) {
    w.values.push_back(static_cast<double>(v));
    if (v < 0) w.admissible = false;
  }
  w.notes = green.notes;
  return w;
}

WeightProfile green_fitzsimmons(const RadialModel& model) { return green_fitzsimmons(model, green_function(model)); }

std::vector<GreenRow> green_table(const RadialModel& model) {
  const GreenProfile g = green_function(model);
  const auto wg = green_weight_q(model, g.values);
  std::vector<GreenRow> rows;
  for (int r = 1; r < model.depth(); ++r) {
    const quad w0 = general_closed_form_q(model, 0.0, r);
    rows.push_back({r, g.values[r], static_cast<double>(wg[r - 1]), static_cast<double>(w0),
                    static_cast<double>(w0 - wg[r - 1])});
  }
  return rows;
}

VerificationReport compare_to_green(const RadialModel& model) {
  VerificationReport rep;
  rep.check = "green-comparison";
  rep.status = Status::pass;
  const int R = model.depth();
  const GreenProfile g = green_function(model);
  const auto wg = green_weight_q(model, g.values);
  rep.params["R"] = static_cast<std::int64_t>(R);
  rep.params["tail_method"] = to_string(g.tail_method);
  rep.params["tail_error_bound"] = g.tail_error_bound;
  for (const auto& n : g.notes) rep.notes.push_back(n);

  // Uncertainty of w_G from the tail bound.
  quad uncertainty = 0;
  if (g.tail_error_bound > 0) {
    for (double sign : {-1.0, 1.0}) {
      const auto alt = green_weight_q(model, shifted(g.values, sign * g.tail_error_bound));
      for (std::size_t i = 0; i < wg.size(); ++i) uncertainty = std::max(uncertainty, qm::abs(alt[i] - wg[i]));
    }
  }
  rep.residuals["w_green_uncertainty"] = static_cast<double>(uncertainty);

  // Constancy radius r₀ of κ and k₋.
  int r0 = -1;
  double kappa_inf = 0;
  if (model.tail().kind == TailKind::eventually_geometric) {
    kappa_inf = model.tail().kappa_inf;
    const double km = model.k_minus(R);
    auto good = [&](int j) { return model.kappa(j) == kappa_inf && model.k_minus(j) == km; };
    int j = R;
    while (j - 1 >= 1 && good(j - 1)) --j;
    // The margin at r ≥ 2 also reads κ(r−1).
    if (j <= R - 1) r0 = j == 1 ? 1 : j + 1;
    if (r0 > R - 1) r0 = -1;
  }
  const bool hypothesis = r0 >= 1 && kappa_inf > 1;
  if (!hypothesis) {
    rep.status = Status::hypothesis_not_met;
    rep.notes.push_back("kappa is not eventually constant > 1; margins are empirical only");
    r0 = 1;
  }
  rep.params["r0"] = static_cast<std::int64_t>(r0);

  quad min_excess = HUGE_VAL;
  quad max_rel_dev = 0;
  long nonmonotone = 0;
  quad prev = HUGE_VAL;
  quad last = 0;
  for (int r = r0; r < R; ++r) {
    const quad margin = general_closed_form_q(model, 0.0, r) - wg[r - 1];
    min_excess = std::min(min_excess, margin - uncertainty);
    if (!(margin < prev)) ++nonmonotone;
    prev = margin;
    last = margin;
    if (hypothesis) {
      const quad x = static_cast<quad>(1) / r;
      const quad a = qm::sqrt(1 - x), b = qm::sqrt(1 + x);
      const quad closed = static_cast<quad>(model.k_minus(r)) * qm::sqrt(static_cast<quad>(kappa_inf)) * 2 * x * x /
                          ((1 + a) * (1 + b) * (a + b));
      max_rel_dev = std::max(max_rel_dev, qm::abs(margin - closed) / closed);
    }
  }
  rep.residuals["min_margin_minus_uncertainty"] = static_cast<double>(min_excess);
  rep.residuals["last_margin"] = static_cast<double>(last);
  rep.residuals["nonmonotone_steps"] = static_cast<double>(nonmonotone);
  if (hypothesis) {
    if (!(min_excess > 0)) rep.status = Status::fail;
    rep.require_at_most("nonmonotone_steps", static_cast<double>(nonmonotone), 0);
    rep.require_at_most("margin_closed_form_rel_dev", static_cast<double>(max_rel_dev), 1e-10);
  }
  return rep;
}

}  // namespace hardylab
