#include "hardylab/vertex_graph.hpp"

#include <cmath>

#include "hardylab/error.hpp"

namespace hardylab {

namespace {

constexpr int kMaxExpansionDepth = 12;

// Weight k₊(depth) for the edges leaving B(depth).
double outer_curvature_at(const RadialModel& model, int depth) {
  if (depth < model.depth()) return model.k_plus(depth);
  if (const auto* tree = std::get_if<TreeGenerator>(&model.generator())) return tree->d;
  if (const auto* anti = std::get_if<AntitreeGenerator>(&model.generator()); anti && anti->poly_power)
    return std::pow(static_cast<double>(depth + 2), *anti->poly_power);
  throw Error(ErrorKind::needs_tail, "k_plus(depth) is not known for the outermost sphere", depth);
}

}  // namespace

VertexGraph::VertexGraph(std::vector<int> sphere, std::vector<double> measure, std::vector<Edge> edges,
                         std::vector<double> outer)
    : sphere_(std::move(sphere)), measure_(std::move(measure)), edges_(std::move(edges)), outer_(std::move(outer)) {
  const std::size_t n = sphere_.size();
  if (measure_.size() != n || outer_.size() != n)
    throw Error(ErrorKind::invalid_parameter, "vertex arrays must have equal length");
  for (int s : sphere_) depth_ = std::max(depth_, s);
  std::vector<std::int64_t> degree(n + 1, 0);
  for (const Edge& e : edges_) {
    if (e.x == e.y || e.b < 0 || std::abs(sphere_[e.x] - sphere_[e.y]) > 1)
      throw Error(ErrorKind::invalid_parameter, "edges must join distinct vertices in equal or adjacent spheres");
    ++degree[e.x + 1];
    ++degree[e.y + 1];
  }
  for (std::size_t i = 1; i <= n; ++i) degree[i] += degree[i - 1];
  offset_ = degree;
  adj_.resize(2 * edges_.size());
  adj_b_.resize(2 * edges_.size());
  std::vector<std::int64_t> fill(offset_.begin(), offset_.end() - 1);
  for (const Edge& e : edges_) {
    adj_[fill[e.x]] = e.y;
    adj_b_[fill[e.x]++] = e.b;
    adj_[fill[e.y]] = e.x;
    adj_b_[fill[e.y]++] = e.b;
  }
}

std::span<const int> VertexGraph::neighbours(int x) const {
  return {adj_.data() + offset_[x], static_cast<std::size_t>(offset_[x + 1] - offset_[x])};
}

std::span<const double> VertexGraph::weights(int x) const {
  return {adj_b_.data() + offset_[x], static_cast<std::size_t>(offset_[x + 1] - offset_[x])};
}

double VertexGraph::outer_curvature(int x) const {
  double sum = 0;
  const auto nb = neighbours(x);
  const auto wb = weights(x);
  for (std::size_t i = 0; i < nb.size(); ++i)
    if (sphere_[nb[i]] == sphere_[x] + 1) sum += wb[i];
  return (sum + outer_[x]) / measure_[x];
}

double VertexGraph::inner_curvature(int x) const {
  double sum = 0;
  const auto nb = neighbours(x);
  const auto wb = weights(x);
  for (std::size_t i = 0; i < nb.size(); ++i)
    if (sphere_[nb[i]] + 1 == sphere_[x]) sum += wb[i];
  return sum / measure_[x];
}

VertexGraph expand_vertex_graph(const RadialModel& model, int depth, long max_vertices) {
  if (!model.has_canonical_realization())
    throw Error(ErrorKind::no_canonical_realization, "only tree and anti-tree models can be expanded");
  if (depth < 1 || depth > std::min(model.depth(), kMaxExpansionDepth))
    throw Error(ErrorKind::invalid_parameter, "expansion depth must lie in [1, min(R, 12)]", depth);

  std::vector<long> sizes(depth + 1);
  long total = 0;
  for (int r = 0; r <= depth; ++r) {
    const double s = model.vol(r).to_double();
    if (s > static_cast<double>(max_vertices) || total + static_cast<long>(s) > max_vertices)
      throw Error(ErrorKind::size_limit, "vertex count exceeds limit " + std::to_string(max_vertices), r);
    sizes[r] = std::lround(s);
    total += sizes[r];
  }
  const double k_out = outer_curvature_at(model, depth);

  std::vector<int> sphere;
  sphere.reserve(total);
  std::vector<long> first(depth + 1);
  for (int r = 0; r <= depth; ++r) {
    first[r] = static_cast<long>(sphere.size());
    sphere.insert(sphere.end(), sizes[r], r);
  }
  std::vector<double> measure(total, 1.0);
  std::vector<double> outer(total, 0.0);
  for (long x = first[depth]; x < total; ++x) outer[x] = k_out;

  std::vector<Edge> edges;
  if (const auto* tree = std::get_if<TreeGenerator>(&model.generator())) {
    edges.reserve(total - 1);
    for (long x = 1; x < total; ++x) edges.push_back({static_cast<int>((x - 1) / tree->d), static_cast<int>(x), 1.0});
  } else {
    for (int r = 1; r <= depth; ++r)
      for (long x = first[r - 1]; x < first[r]; ++x)
        for (long y = first[r]; y < first[r] + sizes[r]; ++y)
          edges.push_back({static_cast<int>(x), static_cast<int>(y), 1.0});
  }
  return VertexGraph(std::move(sphere), std::move(measure), std::move(edges), std::move(outer));
}

bool check_weak_symmetry(const VertexGraph& graph, const RadialModel& model) {
  for (int x = 0; x < graph.size(); ++x) {
    const int r = graph.sphere(x);
    if (graph.inner_curvature(x) != model.k_minus(r)) return false;
    if (r < model.depth() && graph.outer_curvature(x) != model.k_plus(r)) return false;
  }
  return true;
}

double vertex_laplacian(const VertexGraph& graph, std::span<const double> f, int x) {
  double sum = 0;
  const auto nb = graph.neighbours(x);
  const auto wb = graph.weights(x);
  for (std::size_t i = 0; i < nb.size(); ++i) sum += wb[i] * (f[x] - f[nb[i]]);
  return sum / graph.measure(x);
}

double vertex_energy(const VertexGraph& graph, std::span<const double> f) {
  // Each undirected edge once, so no factor ½.
  double sum = 0;
  for (const Edge& e : graph.edges()) {
    const double diff = f[e.x] - f[e.y];
    sum += e.b * diff * diff;
  }
  return sum;
}

}  // namespace hardylab
