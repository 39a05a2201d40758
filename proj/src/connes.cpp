#include "gasket/connes.hpp"

#include <cmath>

namespace gasket {

namespace {

int require_index(const LengthGraph& g, const VertexId& v) {
  const int idx = g.index_of(v);
  if (idx < 0)
    throw config_error("vertex " + v.str() + " is not in the level-" +
                       std::to_string(g.level) + " graph");
  return idx;
}

}  // namespace

LipschitzProgram make_lipschitz_program(const VertexId& p, const VertexId& q,
                                        const LengthGraph& g) {
  LipschitzProgram prog;
  prog.graph = &g;
  prog.source = require_index(g, p);
  prog.target = require_index(g, q);
  prog.constraints.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    prog.constraints.push_back({e.a, e.b, e.length});
  }
  return prog;
}

bool is_feasible(const LipschitzProgram& prog, const std::vector<double>& f,
                 double tol) {
  for (const auto& c : prog.constraints) {
    if (std::abs(f[static_cast<std::size_t>(c.u)] -
                 f[static_cast<std::size_t>(c.v)]) > c.bound + tol)
      return false;
  }
  return true;
}

double connes_distance(const VertexId& p, const VertexId& q,
                       const LengthGraph& g) {
  const int pi = require_index(g, p);
  const int qi = require_index(g, q);
  if (pi == qi) return 0.0;
  // The optimum of the difference-constraint program is the shortest-path
  // distance; evaluate the distance-from-target witness at the source.
  const auto sp = shortest_paths(g, qi);
  const double d = sp.dist[static_cast<std::size_t>(pi)];
  if (!std::isfinite(d)) throw validation_error("vertex unreachable");
  return d;
}

double connes_distance_ascent(const VertexId& p, const VertexId& q,
                              const LengthGraph& g, int max_vertices) {
  const int n = g.vertex_count();
  if (n > max_vertices)
    throw config_error("ascent oracle refuses graphs with more than " +
                       std::to_string(max_vertices) + " vertices");
  const int src = require_index(g, p);
  const int tgt = require_index(g, q);

  // Start at the feasible point f = 0 and raise each coordinate to its
  // largest feasible value given the others. Values grow monotonically to
  // the unique fixed point f(u) = min over neighbors of f(v) + length.
  std::vector<double> f(static_cast<std::size_t>(n), 0.0);
  bool settled = false;
  for (int sweep = 0; sweep < 2 * n + 4 && !settled; ++sweep) {
    settled = true;
    for (int u = 0; u < n; ++u) {
      if (u == tgt) continue;
      double cap = std::numeric_limits<double>::infinity();
      for (const auto& adj : g.adjacency[static_cast<std::size_t>(u)]) {
        cap = std::min(cap, f[static_cast<std::size_t>(adj.to)] + adj.length);
      }
      if (cap > f[static_cast<std::size_t>(u)]) {
        f[static_cast<std::size_t>(u)] = cap;
        settled = false;
      }
    }
  }
  if (!settled) throw validation_error("ascent oracle did not settle");
  if (!is_feasible(make_lipschitz_program(p, q, g), f, 1e-9))
    throw validation_error("ascent oracle left the feasible polytope");
  return f[static_cast<std::size_t>(src)] - f[static_cast<std::size_t>(tgt)];
}

VertexFunction witness_function(const VertexId& p, const LengthGraph& g) {
  const int pi = require_index(g, p);
  const auto sp = shortest_paths(g, pi);
  VertexFunction h;
  h.level = g.level;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    h.values.emplace(g.vertices[i], sp.dist[i]);
  }
  return h;
}

SeminormPair seminorm_equality_check(const VertexFunction& f,
                                     const LengthGraph& g) {
  SeminormPair out;
  std::vector<double> values(g.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    values[i] = f.at(g.vertices[i]);
  }
  for (const auto& e : g.edges) {
    const double ratio = std::abs(values[static_cast<std::size_t>(e.a)] -
                                  values[static_cast<std::size_t>(e.b)]) /
                         e.length;
    out.edge_sup = std::max(out.edge_sup, ratio);
  }
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto sp = shortest_paths(g, static_cast<int>(i));
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      if (sp.dist[j] > 0.0) {
        out.pairwise_sup = std::max(
            out.pairwise_sup, std::abs(values[i] - values[j]) / sp.dist[j]);
      }
    }
  }
  return out;
}

}  // namespace gasket
