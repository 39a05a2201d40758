#pragma once

#include <functional>

#include "gasket/graph.hpp"
#include "gasket/harmonic.hpp"

namespace gasket {

/// Shortest path as a concatenation of graph edges. Consecutive edges share
/// exactly one endpoint and the total length equals the sum of member edge
/// lengths.
struct GeodesicPath {
  VertexId from;
  VertexId to;
  std::vector<EdgeId> edges;
  double length = 0.0;
};

struct ShortestPaths {
  int source = 0;
  std::vector<double> dist;
  std::vector<int> parent_vertex;  // -1 at source / unreached
  std::vector<int> parent_edge;
};

// Dijkstra over the weighted graph. Among equal-length paths the
// lexicographically smaller candidate edge sequence is preferred at each
// relaxation, which pins the returned tree deterministically.
ShortestPaths shortest_paths(const LengthGraph& g, int source);

double geodesic_distance(const VertexId& p, const VertexId& q,
                         const LengthGraph& g);

GeodesicPath geodesic_path(const VertexId& p, const VertexId& q,
                           const LengthGraph& g);

// Discrete approximation of the metric line integral along the polyline:
// sum over forward differences of <Δγ, Z(word) Δγ>^(1/2).
double path_energy_integral(const AddressedPolyline& path,
                            const std::function<Eigen::Matrix2d(const Word&)>& z);

// |Z v - v| / |v| where v is the local polyline tangent at one of
// `sample_count` interior sample points of the edge, and Z is the metric
// matrix of the sample's address prefix at z_depth letters. The overload
// takes the matrix source explicitly (the identity source gives 0).
double tangent_projection_residual(const EdgeId& e, int sample_index,
                                   int sample_count, int z_depth, int refine);
double tangent_projection_residual(
    const EdgeId& e, int sample_index, int sample_count, int z_depth,
    int refine, const std::function<Eigen::Matrix2d(const Word&)>& z);

}  // namespace gasket
