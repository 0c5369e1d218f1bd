#include "hardylab/vertex_spectrum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hardylab/error.hpp"

namespace hardylab {

VertexForm vertex_dirichlet_form(const VertexGraph& graph, const std::function<double(int)>& potential,
                                 bool exclude_root) {
  VertexForm form;
  std::vector<int> row(graph.size(), -1);
  for (int x = 0; x < graph.size(); ++x) {
    if (exclude_root && graph.sphere(x) == 0) continue;
    row[x] = form.size();
    form.vertex.push_back(x);
  }
  form.diagonal.resize(form.size());
  for (int i = 0; i < form.size(); ++i) {
    const int x = form.vertex[i];
    double deg = graph.outer(x);
    for (double b : graph.weights(x)) deg += b;
    form.diagonal[i] = deg - potential(graph.sphere(x)) * graph.measure(x);
  }
  for (const Edge& e : graph.edges())
    if (row[e.x] >= 0 && row[e.y] >= 0) form.offdiagonal.push_back({row[e.x], row[e.y], -e.b});
  form.forest = static_cast<int>(form.offdiagonal.size()) < form.size() && graph.is_tree();
  return form;
}

double dense_smallest_eigenvalue(const VertexForm& form) {
  const int n = form.size();
  if (n == 0) throw Error(ErrorKind::invalid_parameter, "empty form");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = form.diagonal[i];
  for (const Edge& e : form.offdiagonal) {
    a(e.x, e.y) += e.b;
    a(e.y, e.x) += e.b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::inconclusive, "dense eigensolver did not converge");
  return solver.eigenvalues().minCoeff();
}

long forest_negative_count(const VertexForm& form, double shift) {
  if (!form.forest) throw Error(ErrorKind::invalid_parameter, "forest elimination needs a forest");
  const int n = form.size();
  // Orient every edge towards the smaller row index; on sphere-ordered trees
  // that is the parent, so eliminating rows in decreasing order visits
  // children first.
  std::vector<int> parent(n, -1);
  std::vector<double> link(n, 0.0);
  for (const Edge& e : form.offdiagonal) {
    const int child = std::max(e.x, e.y);
    if (parent[child] != -1) throw Error(ErrorKind::invalid_parameter, "vertex with two parents");
    parent[child] = std::min(e.x, e.y);
    link[child] = e.b;
  }
  std::vector<long double> pivot(form.diagonal.begin(), form.diagonal.end());
  for (auto& p : pivot) p += shift;
  const long double pivmin = std::numeric_limits<long double>::min() * 1e4L;
  long negatives = 0;
  for (int i = n - 1; i >= 0; --i) {
    if (std::fabs(pivot[i]) < pivmin) pivot[i] = -pivmin;
    if (pivot[i] < 0) ++negatives;
    if (parent[i] >= 0) pivot[parent[i]] -= static_cast<long double>(link[i]) * link[i] / pivot[i];
  }
  return negatives;
}

PsdCheck check_psd(const VertexForm& form, double tol, int dense_limit) {
  PsdCheck out;
  if (form.size() <= dense_limit) {
    out.method = "dense";
    out.min_eigenvalue = dense_smallest_eigenvalue(form);
    out.psd = out.min_eigenvalue >= -tol;
    return out;
  }
  if (!form.forest)
    throw Error(ErrorKind::size_limit, "form too large for the dense solver and not a forest");
  out.method = "forest-inertia";
  out.negative_count = forest_negative_count(form, tol);
  out.psd = out.negative_count == 0;
  return out;
}

}  // namespace hardylab
