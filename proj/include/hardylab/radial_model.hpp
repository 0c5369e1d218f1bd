#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hardylab/wide_real.hpp"

namespace hardylab {

using BigInt = boost::multiprecision::cpp_int;

enum class TailKind { finite, eventually_geometric, unspecified };

// Behaviour of the graph beyond the stored depth R.
//
// eventually_geometric(κ∞) means κ(r) = κ∞ and k₋(r) = k₋(R) for all r ≥ R,
// hence area(n) = area(R)·κ∞^(n−R) for n ≥ R.
struct Tail {
  TailKind kind = TailKind::unspecified;
  double kappa_inf = 0.0;

  static Tail finite() { return {TailKind::finite, 0.0}; }
  static Tail geometric(double kappa_inf) { return {TailKind::eventually_geometric, kappa_inf}; }
  static Tail unspecified() { return {TailKind::unspecified, 0.0}; }

  friend bool operator==(const Tail&, const Tail&) = default;
};

std::string to_string(const Tail& tail);

// Integer descriptions retained by the tree / anti-tree constructors. They give
// exact areas (also beyond the stored depth when a closed form is known) and
// the canonical vertex realization.
struct TreeGenerator {
  int d = 1;
};
struct AntitreeGenerator {
  std::vector<std::int64_t> s;  // sphere sizes s(0..R)
  std::optional<int> poly_power;  // s(r) = (r+1)^p when set
};
using Generator = std::variant<std::monostate, TreeGenerator, AntitreeGenerator>;

// Radial data (k₊, k₋, vol) of a weakly spherically symmetric graph with a
// single root sphere S(0), stored for spheres 0..R.
//
// Immutable after construction. Invariant: k₋(r)·vol(r) = k₊(r−1)·vol(r−1)
// for 1 ≤ r ≤ R.
class RadialModel {
 public:
  int depth() const { return static_cast<int>(vol_.size()) - 1; }

  // k₊(r) for 0 ≤ r ≤ R−1.
  double k_plus(int r) const;
  // k₋(r) for 0 ≤ r ≤ R, with k₋(0) = 0.
  double k_minus(int r) const;
  const WideReal& vol(int r) const;
  // area(r) = k₋(r)·vol(r); area(0) = 0 (empty sum).
  WideReal area(int r) const;
  // κ(r) = k₊(r)/k₋(r) for 1 ≤ r ≤ R−1. Undefined at the root.
  double kappa(int r) const;
  quad kappa_q(int r) const;

  const Tail& tail() const { return tail_; }
  const std::string& label() const { return label_; }
  const Generator& generator() const { return generator_; }
  bool has_canonical_realization() const { return generator_.index() != 0; }

  // Exact area(n) for constructor-built models; may reach past the stored
  // depth for trees and polynomial anti-trees. nullopt otherwise.
  std::optional<BigInt> exact_area(long n) const;

  // Copy restricted to spheres 0..new_depth; tail becomes unspecified unless
  // the generator or a geometric tail still describes the rest.
  RadialModel truncated(int new_depth) const;

  std::span<const double> k_plus_data() const { return k_plus_; }
  std::span<const double> k_minus_data() const { return k_minus_; }
  std::span<const WideReal> vol_data() const { return vol_; }

  // Bitwise equality of k₊, k₋ and vol.
  bool same_radial_data(const RadialModel& other) const;

 private:
  friend RadialModel make_tree(int d, int depth);
  friend RadialModel make_antitree(std::span<const std::int64_t> s, int depth);
  friend RadialModel make_antitree_poly(int p, int depth);
  friend RadialModel make_custom(std::vector<double> k_plus, std::vector<double> k_minus,
                                 std::vector<WideReal> vol, Tail tail, std::string label);

  std::vector<double> k_plus_;   // 0..R−1
  std::vector<double> k_minus_;  // 0..R
  std::vector<WideReal> vol_;    // 0..R
  Tail tail_;
  std::string label_;
  Generator generator_;
};

// Rooted (d+1)-regular tree: k₊ = d, k₋ = 1, vol(r) = d^r. d = 1 is ℕ₀.
RadialModel make_tree(int d, int depth);
// Anti-tree with sphere sizes s(0..depth), complete bipartite joins between
// consecutive spheres, unit weights and measure. Requires s(0) = 1.
RadialModel make_antitree(std::span<const std::int64_t> s, int depth);
// Anti-tree with s(r) = (r+1)^p.
RadialModel make_antitree_poly(int p, int depth);
// k_plus has R entries (r = 0..R−1); k_minus and vol have R+1 entries
// (r = 0..R) with k_minus[0] = 0. Compatibility is checked to 1e-12 relative.
RadialModel make_custom(std::vector<double> k_plus, std::vector<double> k_minus, std::vector<WideReal> vol,
                        Tail tail, std::string label = "custom");

inline double kappa(const RadialModel& model, int r) { return model.kappa(r); }
inline WideReal area(const RadialModel& model, int r) { return model.area(r); }

// Text format "radial-model v1"; see README for the grammar.
std::string write_model(const RadialModel& model);
RadialModel read_model(const std::string& text);
RadialModel load_model_file(const std::string& path);
// Shorthands tree:<d>:<R>, antitree:poly:<p>:<R>, file:<path>; a bare path is
// read as a model file.
RadialModel parse_model_source(const std::string& source);

}  // namespace hardylab
