#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gasket/polyline.hpp"

namespace gasket {

struct GraphEdge {
  EdgeId id;
  int a = 0;  // vertex indices
  int b = 0;
  double length = 0.0;
};

/// Level-m approximation graph: the 3^(m+1) cell sides with shared vertices
/// merged, each side weighted by its curve length.
struct LengthGraph {
  Geometry geometry = Geometry::euclidean;
  int level = 0;
  int refine = kDefaultRefine;

  std::vector<VertexId> vertices;  // sorted canonical ids
  std::vector<Eigen::Vector2d> positions;
  std::vector<GraphEdge> edges;  // enumeration order: cell lex, side l<r<b

  struct Adjacent {
    int to = 0;
    int edge = 0;
    double length = 0.0;
  };
  std::vector<std::vector<Adjacent>> adjacency;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }

  // Index of a canonical vertex id, or -1.
  int index_of(const VertexId& v) const;

  double min_length() const;
  double max_length() const;
};

// Optional source of precomputed harmonic lengths (the on-disk cache plugs in
// here). Returning nullopt falls back to computing the length.
using LengthProvider = std::function<std::optional<double>(const EdgeId&)>;

LengthGraph build_length_graph(Geometry g, int level,
                               int refine = kDefaultRefine,
                               std::size_t edge_budget = kMaxGraphEdges,
                               const LengthProvider& provider = {});

}  // namespace gasket
