#include "gasket/affine.hpp"

#include <cmath>

namespace gasket {

AffineMap compose(const AffineMap& a, const AffineMap& b) {
  AffineMap out;
  out.linear = a.linear * b.linear;
  out.offset = a.linear * b.offset + a.offset;
  return out;
}

namespace {

std::array<Eigen::Vector2d, 3> euclid_corners_init() {
  const double s3 = std::sqrt(3.0);
  return {Eigen::Vector2d(0.0, 0.0), Eigen::Vector2d(1.0, 0.0),
          Eigen::Vector2d(0.5, 0.5 * s3)};
}

// q_i = P(e_i)/√2 where P projects R^3 onto the zero-sum plane, written in
// the fixed orthonormal basis u_1 = (1,-1,0)/√2, u_2 = (1,1,-2)/√6.
std::array<Eigen::Vector2d, 3> harmonic_corners_init() {
  const double s3 = std::sqrt(3.0);
  return {Eigen::Vector2d(0.5, 1.0 / (2.0 * s3)),
          Eigen::Vector2d(-0.5, 1.0 / (2.0 * s3)),
          Eigen::Vector2d(0.0, -1.0 / s3)};
}

std::array<Eigen::Matrix2d, 3> harmonic_linear_init() {
  std::array<Eigen::Matrix2d, 3> js;
  const auto corners = harmonic_corners_init();
  const double s3 = std::sqrt(3.0);
  for (int i = 0; i < 3; ++i) {
    // J_i = (1/5) I + (2/5) q̂ q̂ᵀ has eigenvalue 3/5 along q_i and 1/5
    // across; the unit-cross eigenvector's sign does not enter.
    const Eigen::Vector2d qhat = s3 * corners[static_cast<std::size_t>(i)];
    js[static_cast<std::size_t>(i)] =
        0.2 * Eigen::Matrix2d::Identity() + 0.4 * (qhat * qhat.transpose());
  }
  return js;
}

IfsFamily euclid_init() {
  IfsFamily fam;
  const auto corners = euclid_corners_init();
  for (int i = 0; i < 3; ++i) {
    AffineMap m;
    m.linear = 0.5 * Eigen::Matrix2d::Identity();
    m.offset = 0.5 * corners[static_cast<std::size_t>(i)];
    fam[static_cast<std::size_t>(i)] = m;
  }
  return fam;
}

IfsFamily harmonic_init() {
  IfsFamily fam;
  const auto corners = harmonic_corners_init();
  const auto js = harmonic_linear_init();
  for (int i = 0; i < 3; ++i) {
    AffineMap m;
    m.linear = js[static_cast<std::size_t>(i)];
    m.offset = corners[static_cast<std::size_t>(i)] -
               js[static_cast<std::size_t>(i)] * corners[static_cast<std::size_t>(i)];
    fam[static_cast<std::size_t>(i)] = m;
  }
  return fam;
}

}  // namespace

const IfsFamily& euclid_ifs() {
  static const IfsFamily fam = euclid_init();
  return fam;
}

const IfsFamily& harmonic_ifs() {
  static const IfsFamily fam = harmonic_init();
  return fam;
}

const IfsFamily& ifs_for(Geometry g) {
  return g == Geometry::euclidean ? euclid_ifs() : harmonic_ifs();
}

const std::array<Eigen::Vector2d, 3>& base_corners(Geometry g) {
  static const std::array<Eigen::Vector2d, 3> pe = euclid_corners_init();
  static const std::array<Eigen::Vector2d, 3> ph = harmonic_corners_init();
  return g == Geometry::euclidean ? pe : ph;
}

const std::array<Eigen::Matrix2d, 3>& harmonic_linear_parts() {
  static const std::array<Eigen::Matrix2d, 3> js = harmonic_linear_init();
  return js;
}

Eigen::Vector2d apply_word(const IfsFamily& maps, const Word& w,
                           const Eigen::Vector2d& x) {
  Eigen::Vector2d y = x;
  for (int i = w.length() - 1; i >= 0; --i) {
    y = maps[static_cast<std::size_t>(w.at(i) - 1)](y);
  }
  return y;
}

AffineMap fold_word_map(const IfsFamily& maps, const Word& w) {
  AffineMap m;
  for (int i = 0; i < w.length(); ++i) {
    m = compose(m, maps[static_cast<std::size_t>(w.at(i) - 1)]);
  }
  return m;
}

}  // namespace gasket
