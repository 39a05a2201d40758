#include "gasket/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace gasket {

int LengthGraph::index_of(const VertexId& v) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || !(*it == v)) return -1;
  return static_cast<int>(it - vertices.begin());
}

double LengthGraph::min_length() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& e : edges) m = std::min(m, e.length);
  return m;
}

double LengthGraph::max_length() const {
  double m = 0.0;
  for (const auto& e : edges) m = std::max(m, e.length);
  return m;
}

LengthGraph build_length_graph(Geometry g, int level, int refine,
                               std::size_t edge_budget,
                               const LengthProvider& provider) {
  if (level < 0) throw config_error("level must be nonnegative");
  if (refine < 0 || refine > kMaxRefine)
    throw config_error("refinement depth outside [0, 22]");
  const double edge_count = 3.0 * std::pow(3.0, level);
  if (edge_count > static_cast<double>(edge_budget))
    throw budget_error("level " + std::to_string(level) + " needs " +
                       std::to_string(static_cast<long long>(edge_count)) +
                       " edges, over the budget of " +
                       std::to_string(edge_budget));

  LengthGraph graph;
  graph.geometry = g;
  graph.level = level;
  graph.refine = refine;

  std::shared_ptr<const std::vector<double>> lengths;
  if (g == Geometry::harmonic && !provider) {
    lengths = level_edge_lengths(g, level, refine);
  }
  const double euclid_length = std::ldexp(1.0, -level);

  // First pass: collect canonical vertices.
  std::map<VertexId, int> index;
  std::size_t edge_idx = 0;
  std::vector<std::pair<EdgeId, double>> raw_edges;
  raw_edges.reserve(static_cast<std::size_t>(edge_count));
  for_each_word(level, [&](const Word& w) {
    for (Side s : {Side::l, Side::r, Side::b}) {
      const EdgeId id{w, s};
      double len = 0.0;
      if (g == Geometry::euclidean) {
        len = euclid_length;
      } else if (provider) {
        const auto cached = provider(id);
        len = cached ? *cached : edge_length(g, id, refine);
      } else {
        len = (*lengths)[edge_idx];
      }
      ++edge_idx;
      raw_edges.emplace_back(id, len);
      index.emplace(id.endpoint_a(), 0);
      index.emplace(id.endpoint_b(), 0);
    }
  });

  graph.vertices.reserve(index.size());
  for (auto& [v, idx] : index) {
    idx = static_cast<int>(graph.vertices.size());
    graph.vertices.push_back(v);
  }
  graph.positions.reserve(index.size());
  for (const auto& v : graph.vertices) {
    graph.positions.push_back(vertex_position(g, v));
  }

  graph.edges.reserve(raw_edges.size());
  graph.adjacency.assign(graph.vertices.size(), {});
  for (const auto& [id, len] : raw_edges) {
    if (!(len > 0.0) || !std::isfinite(len))
      throw validation_error("edge " + id.str() + " has invalid length");
    GraphEdge e;
    e.id = id;
    e.a = index.at(id.endpoint_a());
    e.b = index.at(id.endpoint_b());
    e.length = len;
    const int eidx = static_cast<int>(graph.edges.size());
    graph.adjacency[static_cast<std::size_t>(e.a)].push_back(
        {e.b, eidx, e.length});
    graph.adjacency[static_cast<std::size_t>(e.b)].push_back(
        {e.a, eidx, e.length});
    graph.edges.push_back(e);
  }

  // Connectivity is structural; a violation means the addressing broke.
  std::vector<char> seen(graph.vertices.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (const auto& adj : graph.adjacency[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(adj.to)]) {
        seen[static_cast<std::size_t>(adj.to)] = 1;
        ++reached;
        stack.push_back(adj.to);
      }
    }
  }
  if (reached != graph.vertices.size())
    throw validation_error("length graph is not connected");

  return graph;
}

}  // namespace gasket
