#pragma once

#include <array>
#include <utility>

#include "gasket/affine.hpp"

namespace gasket {

/// Canonical vertex address: the shortest (word, corner) pair reaching the
/// point. Interior vertices have exactly two shortest addresses and the
/// lexicographically smaller one is canonical; the three root corners have
/// one address each.
struct VertexId {
  Word word;
  int corner = 1;  // 1..3

  static VertexId canonical(Word w, int corner);

  // The other shortest address of the same point; for root corners returns
  // the id itself.
  VertexId twin() const;

  int level() const { return word.length(); }

  std::string str() const;  // "12:3"; the empty word prints as "0"
  static VertexId parse(const std::string& text);

  friend bool operator==(const VertexId&, const VertexId&) = default;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

/// One side of one cell. Distinct EdgeIds name distinct curve segments.
struct EdgeId {
  Word cell;
  Side side = Side::l;

  // Corner indices joined by a side: l=(1,3), r=(2,3), b=(1,2). The first
  // corner is the orientation origin of the edge.
  static std::pair<int, int> side_corners(Side s);

  VertexId endpoint_a() const;
  VertexId endpoint_b() const;

  // Halving the edge: sub-edges of the two child cells touching it, in order
  // along the edge.
  std::array<EdgeId, 2> children() const;

  int level() const { return cell.length(); }
  std::string str() const;  // "12/b"

  friend bool operator==(const EdgeId&, const EdgeId&) = default;
  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

// Ambient coordinates of a vertex (Euclidean chart or harmonic chart).
Eigen::Vector2d vertex_position(Geometry g, const VertexId& v);

// Prefix of the vertex's infinite address (canonical word followed by the
// corner letter repeated).
Word vertex_address_prefix(const VertexId& v, int depth);

}  // namespace gasket
