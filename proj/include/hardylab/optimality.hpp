#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hardylab/radial_model.hpp"
#include "hardylab/report.hpp"
#include "hardylab/spectral_ops.hpp"
#include "hardylab/vertex_graph.hpp"
#include "hardylab/weight_profile.hpp"

namespace hardylab {

// |E(vφ) − ‖vφ‖²_w − ½Σ b v(x)v(y)(φ(x)−φ(y))²| / max(1, |E(vφ) − ‖vφ‖²_w|)
// with w = (−Δv)/v. φ must vanish where v does.
double ground_state_identity(const VertexGraph& graph, std::span<const double> v, std::span<const double> phi);
std::vector<double> radial_to_vertex(const VertexGraph& graph, const RadialFunction& f);
// `count` seeded random φ, uniform in [−1, 1] on {v > 0}.
VerificationReport ground_state_check(const VertexGraph& graph, std::span<const double> v, int count,
                                      std::uint64_t seed, const std::string& name);

struct CriticalityEnergy {
  double direct = 0.0;       // E(e_n) − ‖e_n‖²_w by summation
  double closed_form = 0.0;  // the sum I
  double relative_difference = 0.0;
};

// e_n = √u_γ·φ_n with φ_n(r) = (1 − ln r/ln n)₊ and φ_n(0) = 1. Needs n ≤ R.
CriticalityEnergy criticality_energy(const RadialModel& model, double gamma, long n);
// I = (1/ln²n) Σ_{r=1}^{n−1} √κ(r) √(r(r+1)) ln²(1+1/r); κ beyond R from a
// geometric tail.
double criticality_closed_form(const RadialModel& model, long n);

struct HelperSumDecay {
  std::vector<double> values;
  double fitted_c = 0.0;           // max over n ≥ 100 of value·ln n
  bool decreasing_beyond_100 = true;
};

// (1/ln²n) Σ_{r=1}^{n−1} ln²(1+1/r)·r·√(1+1/r) for each n.
HelperSumDecay helper_sum_decay(const std::vector<long>& n_list);

struct NullCriticality {
  double sum = 0.0;         // Σ u(r)w(r)vol(r)
  double floor_part = 0.0;  // Σ √κ(r)/(4r), the 1/(4r²) share of the floor
};

// Partial sums over first ≤ r ≤ R (R ≤ depth − 1) with the closed-form w_γ.
NullCriticality null_criticality_sum(const RadialModel& model, double gamma, int R, int first = 2);

enum class ProbeStatus { refuted, not_refuted };

struct ProbeResult {
  ProbeStatus status = ProbeStatus::not_refuted;
  int first_failing_b = -1;
  int b_max = 0;                // largest annulus end examined
  double eigenvalue_at_end = 0.0;  // smallest eigenvalue at first_failing_b, or at b_max
  int evaluations = 0;
};

// Annuli [K+1, b] with weight (1+λ)w, b = K+1+2^k − 1 then bisection.
ProbeResult optimality_probe(const RadialModel& model, const WeightProfile& w, double lambda, int k_radius,
                             int r_max);
VerificationReport to_report(const ProbeResult& result, double lambda, int k_radius, int r_max, bool expect_refuted);

// max over 1 ≤ r < R of max(u(r)/u(r+1), u(r+1)/u(r)).
double bounded_oscillation(const RadialModel& model, double gamma, int R);

VerificationReport properness_proxy(const RadialModel& model, double gamma);

// Vertex-level PSD of the Dirichlet form on B(r_vertex) minus k₋(√κ−1)²·m,
// plus radial Dirichlet bottoms on [0, R] for R in radial_depths.
VerificationReport lambda0_bound(const RadialModel& model, int r_vertex, const std::vector<int>& radial_depths,
                                 long max_vertices = 2000000);

}  // namespace hardylab
