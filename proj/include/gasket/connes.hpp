#pragma once

#include "gasket/geodesic.hpp"

namespace gasket {

/// maximize f(source) - f(target) subject to |f(u) - f(v)| <= length(uv) for
/// every graph edge. The optimum equals the shortest-path distance.
struct LipschitzProgram {
  const LengthGraph* graph = nullptr;
  int source = 0;
  int target = 0;

  struct Constraint {
    int u = 0;
    int v = 0;
    double bound = 0.0;
  };
  std::vector<Constraint> constraints;
};

LipschitzProgram make_lipschitz_program(const VertexId& p, const VertexId& q,
                                        const LengthGraph& g);

// Whether |f(u) - f(v)| <= bound + tol holds for every constraint.
bool is_feasible(const LipschitzProgram& prog, const std::vector<double>& f,
                 double tol);

// Distance induced by the constraint program, solved through its duality
// with shortest paths (evaluates the distance-from-target witness at the
// source).
double connes_distance(const VertexId& p, const VertexId& q,
                       const LengthGraph& g);

// Independent generic solver: coordinate ascent over the feasible polytope
// with the target pinned at 0, raising each coordinate to its largest
// feasible value until a fixed point. Certifies the duality shortcut on
// small graphs; refuses graphs with more than max_vertices vertices.
double connes_distance_ascent(const VertexId& p, const VertexId& q,
                              const LengthGraph& g, int max_vertices = 30);

// h(x) = d(p, x): feasible for every program anchored at p and attains the
// optimum f(q) - f(p) = d(p, q).
VertexFunction witness_function(const VertexId& p, const LengthGraph& g);

struct SeminormPair {
  double edge_sup = 0.0;      // max over edges of |Δf| / α
  double pairwise_sup = 0.0;  // max over vertex pairs of |f(x)-f(y)| / d(x,y)
};

// Both suprema of the same function; they coincide because every shortest
// path is an edge concatenation.
SeminormPair seminorm_equality_check(const VertexFunction& f,
                                     const LengthGraph& g);

}  // namespace gasket
