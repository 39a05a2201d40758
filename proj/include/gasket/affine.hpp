#pragma once

#include <Eigen/Dense>
#include <array>

#include "gasket/word.hpp"

namespace gasket {

/// Plane affine map x -> linear * x + offset.
struct AffineMap {
  Eigen::Matrix2d linear = Eigen::Matrix2d::Identity();
  Eigen::Vector2d offset = Eigen::Vector2d::Zero();

  Eigen::Vector2d operator()(const Eigen::Vector2d& x) const {
    return linear * x + offset;
  }
};

// a after b (function composition a ∘ b).
AffineMap compose(const AffineMap& a, const AffineMap& b);

using IfsFamily = std::array<AffineMap, 3>;

// F_i x = (x - p_i)/2 + p_i with corners p_1=(0,0), p_2=(1,0), p_3=(1/2, √3/2).
const IfsFamily& euclid_ifs();

// H_i x = J_i (x - q_i) + q_i in the fixed orthonormal chart of the zero-sum
// plane, where J_i is symmetric with eigenvalues 3/5 (along q_i) and 1/5.
const IfsFamily& harmonic_ifs();

const IfsFamily& ifs_for(Geometry g);

// Fixed points of the three contractions: p_i, respectively q_i.
const std::array<Eigen::Vector2d, 3>& base_corners(Geometry g);

// The linear parts J_1, J_2, J_3 of the harmonic contractions.
const std::array<Eigen::Matrix2d, 3>& harmonic_linear_parts();

// (map_{w_1} ∘ ... ∘ map_{w_m})(x) applied letterwise; the empty word is the
// identity.
Eigen::Vector2d apply_word(const IfsFamily& maps, const Word& w,
                           const Eigen::Vector2d& x);

// Left-fold composition (((m_{w_1} ∘ m_{w_2}) ∘ m_{w_3}) ∘ ...). Folding order
// is pinned so that fold(w + letter) performs exactly fold(w) composed with
// one more map, which downstream length recursions rely on.
AffineMap fold_word_map(const IfsFamily& maps, const Word& w);

}  // namespace gasket
