#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hardylab/radial_model.hpp"

namespace hardylab {

struct Edge {
  int x;
  int y;
  double b;
};

// Explicit finite graph on B(depth) with CSR adjacency.
//
// `outer` holds, per vertex, the total edge weight towards the sphere
// depth+1 that is not materialized. It is zero inside the ball and lets
// Dirichlet forms on B(depth) see the edges leaving the ball.
class VertexGraph {
 public:
  VertexGraph(std::vector<int> sphere, std::vector<double> measure, std::vector<Edge> edges,
              std::vector<double> outer);

  int size() const { return static_cast<int>(sphere_.size()); }
  int depth() const { return depth_; }
  int sphere(int x) const { return sphere_[x]; }
  double measure(int x) const { return measure_[x]; }
  double outer(int x) const { return outer_[x]; }
  const std::vector<Edge>& edges() const { return edges_; }
  // Neighbours of x and the matching weights b(x, ·).
  std::span<const int> neighbours(int x) const;
  std::span<const double> weights(int x) const;
  // Edge weight towards spheres |x|+1 and |x|−1, divided by m(x).
  double outer_curvature(int x) const;
  double inner_curvature(int x) const;
  bool is_tree() const { return edges_.size() + 1 == sphere_.size(); }

 private:
  std::vector<int> sphere_;
  std::vector<double> measure_;
  std::vector<Edge> edges_;
  std::vector<double> outer_;
  std::vector<std::int64_t> offset_;
  std::vector<int> adj_;
  std::vector<double> adj_b_;
  int depth_ = 0;
};

constexpr long kDefaultVertexLimit = 100000;

// Canonical realization of a tree or anti-tree model on B(depth). Vertices
// are numbered sphere by sphere, the root is vertex 0. Outer weights use the
// generator, so depth may equal the model depth.
VertexGraph expand_vertex_graph(const RadialModel& model, int depth, long max_vertices = kDefaultVertexLimit);

// True iff every vertex reproduces k₊ and k₋ of the model exactly.
bool check_weak_symmetry(const VertexGraph& graph, const RadialModel& model);

// (−Δf)(x) = (1/m(x)) Σ_y b(x,y)(f(x) − f(y)) on the finite graph.
double vertex_laplacian(const VertexGraph& graph, std::span<const double> f, int x);
// ½ Σ_{x,y} b(x,y)(f(x) − f(y))².
double vertex_energy(const VertexGraph& graph, std::span<const double> f);

}  // namespace hardylab
