#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <random>

#include "hardylab/error.hpp"
#include "hardylab/hardy_weights.hpp"
#include "hardylab/spectral_ops.hpp"
#include "hardylab/vertex_spectrum.hpp"

using namespace hardylab;

namespace {

Eigen::VectorXd dense_eigenvalues(const TridiagonalForm& t) {
  const int n = t.size();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = t.diagonal[i];
  for (int i = 0; i + 1 < n; ++i) a(i, i + 1) = a(i + 1, i) = t.offdiagonal[i];
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a).eigenvalues();
}

}  // namespace

TEST_CASE("Dirichlet path on the half-line") {
  const RadialModel m = make_tree(1, 20);
  const TridiagonalForm t = shifted_laplacian_matrix(m, 0.0, 1, 10);
  CHECK(t.size() == 10);
  CHECK(smallest_eigenvalue(t, 1e-16) == doctest::Approx(0.081014052771005220).epsilon(1e-12));
}

TEST_CASE("Sturm counts agree with a dense eigensolver") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> k(0.5, 3.0);
  std::vector<double> kp, km{0.0};
  std::vector<WideReal> vol{WideReal(1.0)};
  for (int r = 0; r < 40; ++r) {
    kp.push_back(k(rng));
    vol.push_back(WideReal(vol.back().to_double() * kp.back() / k(rng)));
    km.push_back(kp.back() * vol[r].to_double() / vol[r + 1].to_double());
  }
  const RadialModel m = make_custom(kp, km, vol, Tail::unspecified());
  const TridiagonalForm t = shifted_laplacian_matrix(m, 0.3, 0, 39);
  const Eigen::VectorXd ev = dense_eigenvalues(t);
  CHECK(smallest_eigenvalue(t, 1e-13) == doctest::Approx(ev(0)).epsilon(1e-10));
  for (double x : {-1.0, 0.0, 0.5, 1.7, 4.0}) {
    int below = 0;
    for (int i = 0; i < ev.size(); ++i) below += ev(i) < x;
    CHECK(eigenvalues_below(t, x) == below);
  }
  CHECK(eigenvalues_below(t, 100.0, 10) == 10);
  CHECK(t.gershgorin_lower() <= ev(0));
  CHECK(t.gershgorin_upper() >= ev(ev.size() - 1));
}

TEST_CASE("Hardy matrix equals energy minus weighted mass") {
  const RadialModel m = make_tree(2, 12);
  const WeightProfile w = optimal_weight(m, 0.0);
  const TridiagonalForm t = hardy_form_matrix(m, w, 2, 8);
  std::vector<double> phi(13, 0.0);
  for (int r = 2; r <= 8; ++r) phi[r] = std::sin(0.7 * r);
  const RadialFunction f = RadialFunction::from_doubles(phi);
  double form = radial_energy(m, f).to_double();
  for (int r = 2; r <= 8; ++r) form -= w.at(r) * phi[r] * phi[r] * m.vol(r).to_double();
  double quad_form = 0;
  for (int i = 0; i < t.size(); ++i) {
    const double psi = phi[i + 2] * std::sqrt(m.vol(i + 2).to_double());
    quad_form += t.diagonal[i] * psi * psi;
    if (i + 1 < t.size()) quad_form += 2 * t.offdiagonal[i] * psi * phi[i + 3] * std::sqrt(m.vol(i + 3).to_double());
  }
  CHECK(quad_form == doctest::Approx(form).epsilon(1e-12));
}

TEST_CASE("Hardy matrix on trees is nonnegative and inflated weights break it") {
  const RadialModel m = make_tree(3, 400);
  const WeightProfile w = optimal_weight(m, 0.0);
  CHECK(smallest_eigenvalue(hardy_form_matrix(m, w, 1, 399)) >= -1e-10);
  CHECK(smallest_eigenvalue(hardy_form_matrix(m, w, 1, 399, 1.5)) < 0);
}

TEST_CASE("radial energy needs a tail when the support reaches R") {
  const RadialModel m = make_tree(2, 5);
  const RadialFunction f = RadialFunction::from_doubles({1, 1, 1, 1, 1, 1});
  CHECK_THROWS_AS(radial_energy(m, f), Error);
}

TEST_CASE("vertex forms: dense and forest inertia agree") {
  const RadialModel m = make_tree(2, 10);
  const VertexGraph g = expand_vertex_graph(m, 7);
  const VertexForm f = vertex_dirichlet_form(g, [](int) { return 0.2; }, true);
  CHECK(f.forest);
  const double lam = dense_smallest_eigenvalue(f);
  CHECK(forest_negative_count(f, -lam + 1e-9) == 0);
  CHECK(forest_negative_count(f, -lam - 1e-6) >= 1);
  const PsdCheck dense = check_psd(f, 1e-9 - lam);
  const PsdCheck forest = check_psd(f, 1e-9 - lam, 10);
  CHECK(dense.psd);
  CHECK(dense.method == "dense");
  CHECK(forest.psd);
  CHECK(forest.method == "forest-inertia");
}

TEST_CASE("radial reduction of a tree ball matches the radial bottom") {
  // The ground state is positive and unique, hence radial.
  const RadialModel m = make_tree(2, 10);
  const VertexGraph g = expand_vertex_graph(m, 6);
  const VertexForm f = vertex_dirichlet_form(g, [](int) { return 0.0; }, false);
  const double radial = smallest_eigenvalue(shifted_laplacian_matrix(m, 0.0, 0, 6), 1e-13);
  CHECK(dense_smallest_eigenvalue(f) == doctest::Approx(radial).epsilon(1e-10));
}
