#include "hardylab/radial_model.hpp"

#include <cmath>
#include <sstream>

#include "hardylab/error.hpp"

namespace hardylab {

namespace {

constexpr double kCompatibilityTol = 1e-12;

void check_index(int r, int lo, int hi, const char* what) {
  if (r < lo || r > hi) {
    std::ostringstream msg;
    msg << what << " index " << r << " outside [" << lo << ", " << hi << "]";
    throw Error(ErrorKind::range_out_of_bounds, msg.str(), r);
  }
}

}  // namespace

std::string to_string(const Tail& tail) {
  switch (tail.kind) {
    case TailKind::finite: return "finite";
    case TailKind::eventually_geometric: {
      std::ostringstream out;
      out.precision(17);
      out << "eventually-geometric " << tail.kappa_inf;
      return out.str();
    }
    case TailKind::unspecified: return "unspecified";
  }
  return "unspecified";
}

double RadialModel::k_plus(int r) const {
  if (r == depth()) throw Error(ErrorKind::needs_tail, "k_plus(R) lies beyond the stored depth", r);
  check_index(r, 0, depth() - 1, "k_plus");
  return k_plus_[r];
}

double RadialModel::k_minus(int r) const {
  check_index(r, 0, depth(), "k_minus");
  return k_minus_[r];
}

const WideReal& RadialModel::vol(int r) const {
  check_index(r, 0, depth(), "vol");
  return vol_[r];
}

WideReal RadialModel::area(int r) const {
  check_index(r, 0, depth(), "area");
  if (r == 0) return {};
  return vol_[r] * WideReal(k_minus_[r]);
}

double RadialModel::kappa(int r) const {
  if (r == 0) throw Error(ErrorKind::undefined_at_origin, "kappa(0) is undefined since k_minus(0) = 0", 0);
  if (r == depth()) throw Error(ErrorKind::needs_tail, "kappa(R) needs k_plus(R)", r);
  check_index(r, 1, depth() - 1, "kappa");
  return k_plus_[r] / k_minus_[r];
}

quad RadialModel::kappa_q(int r) const {
  (void)kappa(r);
  return static_cast<quad>(k_plus_[r]) / static_cast<quad>(k_minus_[r]);
}

std::optional<BigInt> RadialModel::exact_area(long n) const {
  if (n < 1) return BigInt(0);
  if (const auto* tree = std::get_if<TreeGenerator>(&generator_)) {
    return boost::multiprecision::pow(BigInt(tree->d), static_cast<unsigned>(n));
  }
  if (const auto* anti = std::get_if<AntitreeGenerator>(&generator_)) {
    if (anti->poly_power) {
      const auto p = static_cast<unsigned>(*anti->poly_power);
      return boost::multiprecision::pow(BigInt(n), p) * boost::multiprecision::pow(BigInt(n + 1), p);
    }
    if (n < static_cast<long>(anti->s.size())) return BigInt(anti->s[n - 1]) * BigInt(anti->s[n]);
  }
  return std::nullopt;
}

RadialModel RadialModel::truncated(int new_depth) const {
  if (new_depth < 2 || new_depth > depth())
    throw Error(ErrorKind::invalid_parameter, "truncation depth must lie in [2, R]", new_depth);
  RadialModel m = *this;
  m.k_plus_.resize(new_depth);
  m.k_minus_.resize(new_depth + 1);
  m.vol_.resize(new_depth + 1);
  if (auto* anti = std::get_if<AntitreeGenerator>(&m.generator_)) anti->s.resize(new_depth + 1);
  if (tail_.kind != TailKind::eventually_geometric && !std::holds_alternative<TreeGenerator>(generator_))
    m.tail_ = Tail::unspecified();
  return m;
}

bool RadialModel::same_radial_data(const RadialModel& other) const {
  return k_plus_ == other.k_plus_ && k_minus_ == other.k_minus_ && vol_ == other.vol_;
}

RadialModel make_tree(int d, int depth) {
  if (d < 1) throw Error(ErrorKind::invalid_parameter, "tree branching d must be >= 1");
  if (depth < 2) throw Error(ErrorKind::invalid_parameter, "depth must be >= 2");
  RadialModel m;
  m.k_plus_.assign(depth, static_cast<double>(d));
  m.k_minus_.assign(depth + 1, 1.0);
  m.k_minus_[0] = 0.0;
  m.vol_.resize(depth + 1);
  // Exact while d^r fits the quad mantissa; afterwards one rounding per step.
  WideReal v(1);
  const WideReal dw(d);
  for (int r = 0; r <= depth; ++r) {
    m.vol_[r] = v;
    v *= dw;
  }
  m.tail_ = d >= 2 ? Tail::geometric(d) : Tail::unspecified();
  m.label_ = "tree:" + std::to_string(d) + ":" + std::to_string(depth);
  m.generator_ = TreeGenerator{d};
  return m;
}

RadialModel make_antitree(std::span<const std::int64_t> s, int depth) {
  if (depth < 2) throw Error(ErrorKind::invalid_parameter, "depth must be >= 2");
  if (s.size() < static_cast<std::size_t>(depth) + 1)
    throw Error(ErrorKind::invalid_parameter, "anti-tree needs sphere sizes s(0..depth)");
  if (s[0] != 1) throw Error(ErrorKind::invalid_parameter, "anti-tree requires a single root, s(0) = 1", 0);
  for (int r = 0; r <= depth; ++r)
    if (s[r] < 1) throw Error(ErrorKind::invalid_parameter, "anti-tree sphere sizes must be >= 1", r);
  RadialModel m;
  m.k_plus_.resize(depth);
  m.k_minus_.resize(depth + 1);
  m.vol_.resize(depth + 1);
  for (int r = 0; r <= depth; ++r) {
    if (r < depth) m.k_plus_[r] = static_cast<double>(s[r + 1]);
    m.k_minus_[r] = r == 0 ? 0.0 : static_cast<double>(s[r - 1]);
    m.vol_[r] = WideReal(static_cast<quad>(s[r]));
  }
  m.tail_ = Tail::unspecified();
  m.label_ = "antitree:" + std::to_string(depth);
  m.generator_ = AntitreeGenerator{std::vector<std::int64_t>(s.begin(), s.begin() + depth + 1), std::nullopt};
  return m;
}

RadialModel make_antitree_poly(int p, int depth) {
  if (p < 0) throw Error(ErrorKind::invalid_parameter, "anti-tree power p must be >= 0");
  std::vector<std::int64_t> s(depth + 1);
  for (int r = 0; r <= depth; ++r) {
    const double value = std::pow(static_cast<double>(r + 1), p);
    if (value > 9.0e15) throw Error(ErrorKind::size_limit, "sphere size (r+1)^p exceeds exact integer range", r);
    s[r] = static_cast<std::int64_t>(std::llround(value));
  }
  RadialModel m = make_antitree(s, depth);
  m.label_ = "antitree:poly:" + std::to_string(p) + ":" + std::to_string(depth);
  std::get<AntitreeGenerator>(m.generator_).poly_power = p;
  return m;
}

RadialModel make_custom(std::vector<double> k_plus, std::vector<double> k_minus, std::vector<WideReal> vol,
                        Tail tail, std::string label) {
  const std::size_t n = vol.size();
  if (n < 3 || k_minus.size() != n || k_plus.size() + 1 != n)
    throw Error(ErrorKind::invalid_parameter,
                "custom model needs k_plus[0..R-1], k_minus[0..R], vol[0..R] with R >= 2");
  if (k_minus[0] != 0.0) throw Error(ErrorKind::invalid_parameter, "k_minus(0) must be 0", 0);
  for (std::size_t r = 0; r < n; ++r) {
    const bool ok = vol[r].is_positive() && (r == 0 || k_minus[r] > 0) && (r + 1 == n || k_plus[r] > 0);
    if (!ok || (r + 1 < n && !std::isfinite(k_plus[r])) || !std::isfinite(k_minus[r]))
      throw Error(ErrorKind::invalid_parameter, "radial data must be strictly positive and finite",
                  static_cast<long>(r));
  }
  for (std::size_t r = 1; r < n; ++r) {
    const WideReal lhs = vol[r] * WideReal(k_minus[r]);
    const WideReal rhs = vol[r - 1] * WideReal(k_plus[r - 1]);
    const quad rel = qm::abs(ratio(lhs - rhs, lhs));
    if (!(rel <= kCompatibilityTol)) {
      std::ostringstream msg;
      msg << "k_minus(r) vol(r) != k_plus(r-1) vol(r-1) at r = " << r << " (relative mismatch "
          << static_cast<double>(rel) << ")";
      throw Error(ErrorKind::inconsistent_model, msg.str(), static_cast<long>(r));
    }
  }
  if (tail.kind == TailKind::eventually_geometric && !(tail.kappa_inf > 1.0))
    throw Error(ErrorKind::invalid_parameter, "eventually-geometric tail requires kappa_inf > 1");
  RadialModel m;
  m.k_plus_ = std::move(k_plus);
  m.k_minus_ = std::move(k_minus);
  m.vol_ = std::move(vol);
  m.tail_ = tail;
  m.label_ = std::move(label);
  return m;
}

}  // namespace hardylab
