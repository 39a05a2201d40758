#pragma once

#include <map>

#include "gasket/vertex.hpp"

namespace gasket {

/// Real values on every vertex of levels 0..level, keyed by canonical id.
struct VertexFunction {
  int level = 0;
  std::map<VertexId, double> values;

  double at(const VertexId& v) const;
  bool contains(const VertexId& v) const { return values.count(v) != 0; }
};

// Per-cell interpolation matrices: corner values of child cell i from corner
// values of the parent (the 2/5–2/5–1/5 midpoint rule).
const std::array<Eigen::Matrix3d, 3>& extension_matrices();

// Unique energy-minimizing extension of boundary values (at the three root
// corners) to all vertices of levels 0..level.
VertexFunction harmonic_extension(const Eigen::Vector3d& boundary, int level);

// Renormalized graph energy (5/3)^k * sum over level-k edges of (Δu)^2.
// u must be defined on every vertex of level <= k.
double graph_energy(const VertexFunction& u, int k);

// Values of the three basis harmonic functions at the corners of a cell:
// row i holds (h_1, h_2, h_3) at corner i.
Eigen::Matrix3d basis_harmonics_at_cell(const Word& cell);

// Harmonic chart of a vertex: the centered triple of basis harmonic values,
// scaled by 1/√2 and expressed in the fixed plane basis. Maps root corners
// to the q_i.
Eigen::Vector2d phi(const VertexId& v);

// Product of the harmonic linear parts along the word, first letter leftmost.
// The empty word gives the identity.
Eigen::Matrix2d jw(const Word& w);

/// Measurable-metric matrix of a cell: the normalized Gram matrix of the cell
/// map, J_w J_w^T / ||J_w||_HS^2. Symmetric, PSD, unit trace; converges to
/// the rank-1 projection onto the local tangent direction along almost every
/// infinite address, and the limit agrees between the two addresses of a
/// vertex. Requires |w| >= 1.
Eigen::Matrix2d kusuoka_z(const Word& w);

// Cell mass of the energy measure: nu(K_w) = (1/2) (5/3)^|w| ||J_w||_HS^2.
// The empty word has mass exactly 1 and masses are additive over children.
double kusuoka_measure(const Word& w);

/// Word prefix with its accumulated map product, metric matrix and measure
/// weight; child() extends the prefix by one letter.
struct KusuokaState {
  Word word;
  Eigen::Matrix2d j = Eigen::Matrix2d::Identity();
  Eigen::Matrix2d z = 0.5 * Eigen::Matrix2d::Identity();
  double nu = 1.0;

  static KusuokaState root();
  KusuokaState child(int letter) const;
};

// Metric matrix at a vertex, evaluated along its canonical infinite address
// truncated at `depth`. Both addresses of a vertex agree in the limit.
Eigen::Matrix2d kusuoka_z_at_vertex(const VertexId& v, int depth);

}  // namespace gasket
