#include "gasket/harmonic.hpp"

#include <cmath>

namespace gasket {

double VertexFunction::at(const VertexId& v) const {
  const auto it = values.find(v);
  if (it == values.end())
    throw config_error("vertex " + v.str() + " is outside the function domain");
  return it->second;
}

const std::array<Eigen::Matrix3d, 3>& extension_matrices() {
  static const std::array<Eigen::Matrix3d, 3> mats = [] {
    std::array<Eigen::Matrix3d, 3> a;
    // Energy minimization over one cell: the midpoint opposite corner k gets
    // (2x_i + 2x_j + x_k)/5.
    a[0] << 1.0, 0.0, 0.0,  //
        0.4, 0.4, 0.2,      //
        0.4, 0.2, 0.4;
    a[1] << 0.4, 0.4, 0.2,  //
        0.0, 1.0, 0.0,      //
        0.2, 0.4, 0.4;
    a[2] << 0.4, 0.2, 0.4,  //
        0.2, 0.4, 0.4,      //
        0.0, 0.0, 1.0;
    return a;
  }();
  return mats;
}

VertexFunction harmonic_extension(const Eigen::Vector3d& boundary, int level) {
  if (level < 0) throw config_error("level must be nonnegative");
  if (level > 13) throw budget_error("extension level over budget");
  VertexFunction out;
  out.level = level;

  Word w;
  auto walk = [&](auto&& self, const Eigen::Vector3d& corners,
                  int depth) -> void {
    if (depth == level) {
      for (int c = 1; c <= 3; ++c) {
        out.values.emplace(VertexId::canonical(w, c), corners[c - 1]);
      }
      return;
    }
    for (int letter = 1; letter <= 3; ++letter) {
      w.push_back(static_cast<std::uint8_t>(letter));
      self(self, extension_matrices()[static_cast<std::size_t>(letter - 1)] *
                     corners,
           depth + 1);
      w.pop_back();
    }
  };
  walk(walk, boundary, 0);
  return out;
}

double graph_energy(const VertexFunction& u, int k) {
  if (k < 0) throw config_error("level must be nonnegative");
  if (k > u.level)
    throw config_error("function is not defined down to level " +
                       std::to_string(k));
  double sum = 0.0;
  for_each_word(k, [&](const Word& w) {
    for (Side s : {Side::l, Side::r, Side::b}) {
      const EdgeId e{w, s};
      const double d = u.at(e.endpoint_a()) - u.at(e.endpoint_b());
      sum += d * d;
    }
  });
  return std::pow(5.0 / 3.0, k) * sum;
}

Eigen::Matrix3d basis_harmonics_at_cell(const Word& cell) {
  Eigen::Matrix3d b = Eigen::Matrix3d::Identity();
  for (int i = 0; i < cell.length(); ++i) {
    b = extension_matrices()[static_cast<std::size_t>(cell.at(i) - 1)] * b;
  }
  return b;
}

Eigen::Vector2d phi(const VertexId& v) {
  static const Eigen::Vector3d u1 =
      Eigen::Vector3d(1.0, -1.0, 0.0) / std::sqrt(2.0);
  static const Eigen::Vector3d u2 =
      Eigen::Vector3d(1.0, 1.0, -2.0) / std::sqrt(6.0);
  const Eigen::Matrix3d b = basis_harmonics_at_cell(v.word);
  const Eigen::Vector3d h = b.row(v.corner - 1);
  const Eigen::Vector3d centered = h - Eigen::Vector3d::Constant(1.0 / 3.0);
  return Eigen::Vector2d(centered.dot(u1), centered.dot(u2)) / std::sqrt(2.0);
}

Eigen::Matrix2d jw(const Word& w) {
  const auto& js = harmonic_linear_parts();
  Eigen::Matrix2d m = Eigen::Matrix2d::Identity();
  for (int i = 0; i < w.length(); ++i) {
    m = m * js[static_cast<std::size_t>(w.at(i) - 1)];
  }
  return m;
}

namespace {

Eigen::Matrix2d normalized_gram(const Eigen::Matrix2d& j) {
  const double hs = j.squaredNorm();
  if (!(hs > 1e-280))
    throw validation_error("map product degenerated below working precision");
  return (j * j.transpose()) / hs;
}

}  // namespace

Eigen::Matrix2d kusuoka_z(const Word& w) {
  if (w.empty()) throw config_error("metric matrix needs a nonempty word");
  return normalized_gram(jw(w));
}

double kusuoka_measure(const Word& w) {
  return 0.5 * std::pow(5.0 / 3.0, w.length()) * jw(w).squaredNorm();
}

KusuokaState KusuokaState::root() { return KusuokaState{}; }

KusuokaState KusuokaState::child(int letter) const {
  if (letter < 1 || letter > 3) throw config_error("letter outside {1,2,3}");
  KusuokaState next;
  next.word = word.appended(static_cast<std::uint8_t>(letter));
  next.j = j * harmonic_linear_parts()[static_cast<std::size_t>(letter - 1)];
  next.z = normalized_gram(next.j);
  next.nu = 0.5 * std::pow(5.0 / 3.0, next.word.length()) * next.j.squaredNorm();
  return next;
}

Eigen::Matrix2d kusuoka_z_at_vertex(const VertexId& v, int depth) {
  if (depth < 1) throw config_error("depth must be at least 1");
  return kusuoka_z(vertex_address_prefix(v, depth));
}

}  // namespace gasket
