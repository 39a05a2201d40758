#include "gasket/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace gasket {

namespace {

std::vector<int> reconstruct_edges(const ShortestPaths& sp, int v) {
  std::vector<int> edges;
  int u = v;
  while (sp.parent_vertex[static_cast<std::size_t>(u)] >= 0) {
    edges.push_back(sp.parent_edge[static_cast<std::size_t>(u)]);
    u = sp.parent_vertex[static_cast<std::size_t>(u)];
  }
  std::reverse(edges.begin(), edges.end());
  return edges;
}

// Lexicographic comparison of the edge-id sequences of two candidate paths
// to the same vertex: the incumbent path, and path(u) extended by edge enew.
bool candidate_is_smaller(const LengthGraph& g, const ShortestPaths& sp,
                          int u, int enew, int v) {
  std::vector<int> cand = reconstruct_edges(sp, u);
  cand.push_back(enew);
  const std::vector<int> incumbent = reconstruct_edges(sp, v);
  const std::size_t n = std::min(cand.size(), incumbent.size());
  for (std::size_t i = 0; i < n; ++i) {
    const EdgeId& a = g.edges[static_cast<std::size_t>(cand[i])].id;
    const EdgeId& b = g.edges[static_cast<std::size_t>(incumbent[i])].id;
    if (a != b) return a < b;
  }
  return cand.size() < incumbent.size();
}

}  // namespace

ShortestPaths shortest_paths(const LengthGraph& g, int source) {
  const std::size_t n = g.vertices.size();
  if (source < 0 || static_cast<std::size_t>(source) >= n)
    throw config_error("source vertex index out of range");

  ShortestPaths sp;
  sp.source = source;
  sp.dist.assign(n, std::numeric_limits<double>::infinity());
  sp.parent_vertex.assign(n, -1);
  sp.parent_edge.assign(n, -1);
  sp.dist[static_cast<std::size_t>(source)] = 0.0;

  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  heap.emplace(0.0, source);
  std::vector<char> settled(n, 0);

  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (settled[static_cast<std::size_t>(u)]) continue;
    settled[static_cast<std::size_t>(u)] = 1;
    for (const auto& adj : g.adjacency[static_cast<std::size_t>(u)]) {
      const double cand = d + adj.length;
      double& dv = sp.dist[static_cast<std::size_t>(adj.to)];
      if (cand < dv) {
        dv = cand;
        sp.parent_vertex[static_cast<std::size_t>(adj.to)] = u;
        sp.parent_edge[static_cast<std::size_t>(adj.to)] = adj.edge;
        heap.emplace(cand, adj.to);
      } else if (cand == dv &&
                 candidate_is_smaller(g, sp, u, adj.edge, adj.to)) {
        sp.parent_vertex[static_cast<std::size_t>(adj.to)] = u;
        sp.parent_edge[static_cast<std::size_t>(adj.to)] = adj.edge;
      }
    }
  }
  return sp;
}

namespace {

int require_index(const LengthGraph& g, const VertexId& v) {
  const int idx = g.index_of(v);
  if (idx < 0)
    throw config_error("vertex " + v.str() + " is not in the level-" +
                       std::to_string(g.level) + " graph");
  return idx;
}

}  // namespace

double geodesic_distance(const VertexId& p, const VertexId& q,
                         const LengthGraph& g) {
  const int pi = require_index(g, p);
  const int qi = require_index(g, q);
  if (pi == qi) return 0.0;
  const auto sp = shortest_paths(g, pi);
  const double d = sp.dist[static_cast<std::size_t>(qi)];
  if (!std::isfinite(d)) throw validation_error("vertex unreachable");
  return d;
}

GeodesicPath geodesic_path(const VertexId& p, const VertexId& q,
                           const LengthGraph& g) {
  const int pi = require_index(g, p);
  const int qi = require_index(g, q);
  GeodesicPath path;
  path.from = g.vertices[static_cast<std::size_t>(pi)];
  path.to = g.vertices[static_cast<std::size_t>(qi)];
  if (pi == qi) return path;
  const auto sp = shortest_paths(g, pi);
  if (!std::isfinite(sp.dist[static_cast<std::size_t>(qi)]))
    throw validation_error("vertex unreachable");
  for (int eidx : reconstruct_edges(sp, qi)) {
    path.edges.push_back(g.edges[static_cast<std::size_t>(eidx)].id);
  }
  path.length = sp.dist[static_cast<std::size_t>(qi)];
  return path;
}

double path_energy_integral(
    const AddressedPolyline& path,
    const std::function<Eigen::Matrix2d(const Word&)>& z) {
  if (path.points.size() < 2) return 0.0;
  if (path.segment_words.size() + 1 != path.points.size())
    throw config_error("polyline carries wrong number of segment addresses");
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < path.points.size(); ++i) {
    const Eigen::Vector2d d = path.points[i + 1] - path.points[i];
    const Eigen::Matrix2d zm = z(path.segment_words[i]);
    total += std::sqrt(std::max(0.0, d.dot(zm * d)));
  }
  return total;
}

double tangent_projection_residual(const EdgeId& e, int sample_index,
                                   int sample_count, int z_depth, int refine) {
  return tangent_projection_residual(
      e, sample_index, sample_count, z_depth, refine,
      [](const Word& w) { return kusuoka_z(w); });
}

double tangent_projection_residual(
    const EdgeId& e, int sample_index, int sample_count, int z_depth,
    int refine, const std::function<Eigen::Matrix2d(const Word&)>& z) {
  if (sample_count < 1 || sample_index < 0 || sample_index >= sample_count)
    throw config_error("sample index outside [0, sample_count)");
  if (z_depth < 1 || z_depth > kMaxWordLetters)
    throw config_error("z depth outside [1, 64]");

  const double t = static_cast<double>(sample_index + 1) /
                   static_cast<double>(sample_count + 1);

  // Address letters of the interior point from the binary digits of t.
  const auto [a, b] = EdgeId::side_corners(e.side);
  Word w = e.cell;
  double frac = t;
  while (w.length() < z_depth) {
    frac *= 2.0;
    const bool one = frac >= 1.0;
    if (one) frac -= 1.0;
    w.push_back(static_cast<std::uint8_t>(one ? b : a));
  }
  const Eigen::Matrix2d zm = z(w.prefix(z_depth));

  const Polyline poly = edge_polyline_harmonic(e, refine);
  const std::size_t segments = poly.points.size() - 1;
  std::size_t seg = static_cast<std::size_t>(t * static_cast<double>(segments));
  seg = std::min(seg, segments - 1);
  const Eigen::Vector2d v = poly.points[seg + 1] - poly.points[seg];
  const double vn = v.norm();
  if (!(vn > 0.0)) throw validation_error("degenerate polyline segment");
  return (zm * v - v).norm() / vn;
}

}  // namespace gasket
