// Test-only oracles, independent of the library's computation paths.
#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "gasket/graph.hpp"

namespace oracles {

// splitmix64; deterministic across platforms.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Plain-double affine arithmetic, no shared code with the library.
struct PlainAffine {
  double m00, m01, m10, m11, t0, t1;

  std::array<double, 2> apply(double x, double y) const {
    return {m00 * x + m01 * y + t0, m10 * x + m11 * y + t1};
  }
};

// Chain application of maps given as a word (first letter outermost).
inline std::array<double, 2> apply_chain(const std::vector<PlainAffine>& maps,
                                         const std::vector<int>& word,
                                         double x, double y) {
  std::array<double, 2> p{x, y};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    p = maps[static_cast<std::size_t>(*it - 1)].apply(p[0], p[1]);
  }
  return p;
}

// Variational harmonic extension: minimize the level-m edge-difference sum
// over all non-boundary vertices with the three root corners fixed. Solves
// the normal equations of the quadratic form directly.
inline std::map<gasket::VertexId, double> variational_extension(
    const Eigen::Vector3d& boundary, int level) {
  using gasket::Side;
  using gasket::VertexId;
  using gasket::Word;

  std::vector<std::pair<VertexId, VertexId>> edges;
  std::map<VertexId, int> index;
  gasket::for_each_word(level, [&](const Word& w) {
    for (Side s : {Side::l, Side::r, Side::b}) {
      const gasket::EdgeId e{w, s};
      edges.emplace_back(e.endpoint_a(), e.endpoint_b());
      index.emplace(e.endpoint_a(), 0);
      index.emplace(e.endpoint_b(), 0);
    }
  });

  // Unknowns: everything except the three root corners.
  std::vector<VertexId> unknowns;
  for (auto& [v, idx] : index) {
    if (v.word.empty()) {
      idx = -v.corner;  // boundary marker
    } else {
      idx = static_cast<int>(unknowns.size());
      unknowns.push_back(v);
    }
  }

  const int n = static_cast<int>(unknowns.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  const auto accumulate = [&](const VertexId& u, const VertexId& v) {
    const int iu = index.at(u);
    const int iv = index.at(v);
    const bool bu = iu < 0;
    const bool bv = iv < 0;
    const double fu = bu ? boundary[-iu - 1] : 0.0;
    const double fv = bv ? boundary[-iv - 1] : 0.0;
    if (!bu) a(iu, iu) += 1.0;
    if (!bv) a(iv, iv) += 1.0;
    if (!bu && !bv) {
      a(iu, iv) -= 1.0;
      a(iv, iu) -= 1.0;
    }
    if (!bu && bv) rhs(iu) += fv;
    if (bu && !bv) rhs(iv) += fu;
  };
  for (const auto& [u, v] : edges) accumulate(u, v);

  const Eigen::VectorXd x = a.ldlt().solve(rhs);
  std::map<VertexId, double> out;
  for (const auto& [v, idx] : index) {
    out[v] = idx < 0 ? boundary[-idx - 1] : x(idx);
  }
  return out;
}

// Count of eigenvalues (2k+1)π/(2α) with |λ| <= cutoff by brute enumeration.
inline std::size_t enumerate_count(double alpha, double cutoff) {
  std::size_t n = 0;
  const double scale = 3.14159265358979323846 / (2.0 * alpha);
  for (long long k = 0;; ++k) {
    if (static_cast<double>(2 * k + 1) * scale > cutoff) break;
    n += 2;
  }
  return n;
}

}  // namespace oracles
