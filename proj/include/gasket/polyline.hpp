#pragma once

#include <memory>
#include <vector>

#include "gasket/vertex.hpp"

namespace gasket {

/// Chain of plane points with its chord-sum length.
struct Polyline {
  std::vector<Eigen::Vector2d> points;
  double length = 0.0;

  // Recomputed left-to-right chord sum; equals `length` up to rounding.
  double chord_sum() const;
};

// Straight chord between the endpoint images of an edge.
double edge_chord(Geometry g, const EdgeId& e);

/// Working length of the curved image of edge e at refinement depth k.
///
/// Defined by the leaf decomposition: length(e, k) is the sum of the 2^k
/// level-(m+k) sub-edge chords, accumulated by the same binary recursion that
/// subdivides the edge. Hence length(e, k+1) == length(child_a, k) +
/// length(child_b, k) holds bit-for-bit, and the value is a lower bound of
/// the true curve length, nondecreasing in k.
double edge_length(Geometry g, const EdgeId& e, int refine);
double edge_length_harmonic(const EdgeId& e, int refine);

/// Polyline through the images of the 2^k + 1 subdivision vertices of edge e,
/// in order along the edge. Its `length` is the leaf-chord sum above.
Polyline edge_polyline(Geometry g, const EdgeId& e, int refine);
Polyline edge_polyline_harmonic(const EdgeId& e, int refine);

// All level-m edge lengths in enumeration order (cells lexicographic, sides
// l, r, b). Memoized per (geometry, level, refine); Euclidean lengths are the
// closed form 2^-m.
std::shared_ptr<const std::vector<double>> level_edge_lengths(Geometry g,
                                                              int level,
                                                              int refine);

/// Polyline whose segments carry word addresses for sampling the measurable
/// metric along the edge. Segment j of the refinement-k subdivision gets the
/// address of its midpoint, truncated or padded to z_depth letters.
struct AddressedPolyline {
  std::vector<Eigen::Vector2d> points;
  std::vector<Word> segment_words;
};

AddressedPolyline edge_addressed_polyline(const EdgeId& e, int refine,
                                          int z_depth);

}  // namespace gasket
