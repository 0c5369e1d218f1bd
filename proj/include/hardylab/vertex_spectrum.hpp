#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hardylab/vertex_graph.hpp"

namespace hardylab {

// Symmetric matrix of φ ↦ E(φ) − Σ_x V(|x|)φ(x)² m(x) on functions supported
// in B(depth) (minus the root when requested). Edges leaving the ball stay
// in the diagonal, so this is the Dirichlet restriction of the full form.
struct VertexForm {
  std::vector<int> vertex;        // row -> vertex id
  std::vector<double> diagonal;   // per row
  std::vector<Edge> offdiagonal;  // row indices, value −b(x,y)
  bool forest = false;            // rows induce a forest
  int size() const { return static_cast<int>(vertex.size()); }
};

VertexForm vertex_dirichlet_form(const VertexGraph& graph, const std::function<double(int)>& potential,
                                 bool exclude_root);

// Smallest eigenvalue via a dense symmetric eigensolver.
double dense_smallest_eigenvalue(const VertexForm& form);

// Number of negative eigenvalues of (form + shift·I), by leaf-to-root
// elimination. Exact inertia (Sylvester) for forests only.
long forest_negative_count(const VertexForm& form, double shift);

struct PsdCheck {
  bool psd = false;
  std::string method;            // "dense" or "forest-inertia"
  double min_eigenvalue = 0.0;   // dense only
  long negative_count = 0;       // forest only, of form + tol·I
};

// form ≥ −tol. Dense up to dense_limit rows, forest elimination beyond.
PsdCheck check_psd(const VertexForm& form, double tol, int dense_limit = 5000);

}  // namespace hardylab
