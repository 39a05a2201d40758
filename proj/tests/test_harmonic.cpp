#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "gasket/harmonic.hpp"
#include "oracles.hpp"

using namespace gasket;

TEST_CASE("constants extend to constants") {
  const auto u = harmonic_extension(Eigen::Vector3d(0.7, 0.7, 0.7), 3);
  for (const auto& [v, value] : u.values) {
    CHECK(value == doctest::Approx(0.7).epsilon(1e-15));
  }
  CHECK(graph_energy(u, 3) == doctest::Approx(0.0));
}

TEST_CASE("level-1 extension matches the variational solver") {
  const Eigen::Vector3d boundary(1.0, 0.0, 0.0);
  const auto u = harmonic_extension(boundary, 1);
  const auto oracle = oracles::variational_extension(boundary, 1);
  for (const auto& [v, expect] : oracle) {
    CHECK(u.at(v) == doctest::Approx(expect).epsilon(1e-12));
  }
  // the 2/5–2/5–1/5 midpoint rule
  CHECK(u.at(VertexId::canonical(Word::parse("1"), 2)) ==
        doctest::Approx(0.4).epsilon(1e-15));
  CHECK(u.at(VertexId::canonical(Word::parse("1"), 3)) ==
        doctest::Approx(0.4).epsilon(1e-15));
  CHECK(u.at(VertexId::canonical(Word::parse("2"), 3)) ==
        doctest::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("level-2 recursion agrees with the global minimization oracle") {
  const Eigen::Vector3d boundary(1.0, 0.0, 0.0);
  const auto u = harmonic_extension(boundary, 2);
  const auto oracle = oracles::variational_extension(boundary, 2);
  for (const auto& [v, expect] : oracle) {
    CHECK(u.at(v) == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("harmonicity is local: cells carry the extension of their corners") {
  const auto u = harmonic_extension(Eigen::Vector3d(0.3, -1.0, 2.0), 4);
  for_each_word(2, [&](const Word& cell) {
    Eigen::Vector3d corners;
    for (int c = 1; c <= 3; ++c)
      corners[c - 1] = u.at(VertexId::canonical(cell, c));
    const auto local = harmonic_extension(corners, 2);
    for_each_word(2, [&](const Word& sub) {
      Word full = cell;
      for (int i = 0; i < sub.length(); ++i) full.push_back(sub.at(i));
      for (int c = 1; c <= 3; ++c) {
        CHECK(u.at(VertexId::canonical(full, c)) ==
              doctest::Approx(local.at(VertexId::canonical(sub, c)))
                  .epsilon(1e-14));
      }
    });
  });
}

TEST_CASE("graph energy: base values and conservation along extensions") {
  const Eigen::Vector3d boundary(1.0, 0.0, 0.0);
  const auto u0 = harmonic_extension(boundary, 0);
  CHECK(graph_energy(u0, 0) == doctest::Approx(2.0).epsilon(1e-15));

  const auto u1 = harmonic_extension(boundary, 1);
  CHECK(graph_energy(u1, 1) == doctest::Approx(2.0).epsilon(1e-14));

  for (int b = 0; b < 3; ++b) {
    Eigen::Vector3d basis = Eigen::Vector3d::Zero();
    basis[b] = 1.0;
    const auto u = harmonic_extension(basis, 6);
    for (int k = 0; k <= 6; ++k) {
      CHECK(std::abs(graph_energy(u, k) - 2.0) < 1e-10);
    }
  }
}

TEST_CASE("phi maps corners to the harmonic simplex and commutes with maps") {
  const auto& q = base_corners(Geometry::harmonic);
  for (int c = 1; c <= 3; ++c) {
    CHECK((phi(VertexId{Word{}, c}) - q[c - 1]).norm() < 1e-15);
  }
  // midpoint of the bottom side via the extension values (2/5, 2/5, 1/5)
  const VertexId mid = VertexId::canonical(Word::parse("1"), 2);
  const Eigen::Vector2d got = phi(mid);
  const Eigen::Vector3d h(0.4, 0.4, 0.2);
  const Eigen::Vector3d centered = h - Eigen::Vector3d::Constant(1.0 / 3.0);
  const Eigen::Vector3d u1 = Eigen::Vector3d(1, -1, 0) / std::sqrt(2.0);
  const Eigen::Vector3d u2 = Eigen::Vector3d(1, 1, -2) / std::sqrt(6.0);
  const Eigen::Vector2d expect =
      Eigen::Vector2d(centered.dot(u1), centered.dot(u2)) / std::sqrt(2.0);
  CHECK((got - expect).norm() < 1e-15);
  CHECK(got.x() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(got.y() == doctest::Approx(std::sqrt(3.0) / 15.0).epsilon(1e-14));

  // chart position equals the affine route for sampled cells
  oracles::Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    Word w;
    const int len = 1 + static_cast<int>(rng.below(8));
    for (int i = 0; i < len; ++i)
      w.push_back(static_cast<std::uint8_t>(1 + rng.below(3)));
    const int c = 1 + static_cast<int>(rng.below(3));
    const VertexId v = VertexId::canonical(w, c);
    CHECK((phi(v) - vertex_position(Geometry::harmonic, v)).norm() < 1e-10);
  }
}

TEST_CASE("jw: identity, powers, explicit products") {
  CHECK((jw(Word{}) - Eigen::Matrix2d::Identity()).norm() == 0.0);

  for (std::uint8_t letter = 1; letter <= 3; ++letter) {
    Word w;
    for (int m = 1; m <= 6; ++m) {
      w.push_back(letter);
      const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(jw(w));
      CHECK(es.eigenvalues()(1) ==
            doctest::Approx(std::pow(0.6, m)).epsilon(1e-13));
      CHECK(es.eigenvalues()(0) ==
            doctest::Approx(std::pow(0.2, m)).epsilon(1e-13));
    }
  }

  // w = 12 against a plain-double product
  const auto& js = harmonic_linear_parts();
  double m[2][2] = {{0, 0}, {0, 0}};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int k = 0; k < 2; ++k) m[r][c] += js[0](r, k) * js[1](k, c);
  const Eigen::Matrix2d got = jw(Word::parse("12"));
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      CHECK(got(r, c) == doctest::Approx(m[r][c]).epsilon(1e-15));
  // and the closed-form entries
  const double s3 = std::sqrt(3.0);
  CHECK(got(0, 0) == doctest::Approx(0.22).epsilon(1e-14));
  CHECK(got(0, 1) == doctest::Approx(-s3 / 50.0).epsilon(1e-13));
  CHECK(got(1, 0) == doctest::Approx(s3 / 50.0).epsilon(1e-13));
  CHECK(got(1, 1) == doctest::Approx(0.06).epsilon(1e-13));
}

TEST_CASE("metric matrix: single letters, trace, shrinking determinant") {
  CHECK_THROWS_AS(kusuoka_z(Word{}), config_error);

  // Z(1) = J_1^2 / ||J_1||_HS^2 has eigenvalues 0.9 and 0.1.
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(
      kusuoka_z(Word::parse("1")));
  CHECK(es.eigenvalues()(1) == doctest::Approx(0.9).epsilon(1e-14));
  CHECK(es.eigenvalues()(0) == doctest::Approx(0.1).epsilon(1e-14));

  oracles::Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    Word w;
    const int len = 1 + static_cast<int>(rng.below(20));
    for (int i = 0; i < len; ++i)
      w.push_back(static_cast<std::uint8_t>(1 + rng.below(3)));
    const Eigen::Matrix2d z = kusuoka_z(w);
    CHECK(std::abs(z.trace() - 1.0) < 1e-12);
    CHECK((z - z.transpose()).norm() < 1e-14);
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> ez(z);
    CHECK(ez.eigenvalues()(0) > -1e-14);
  }

  // determinant decreases to 0 along a repeated-letter tail (rank-1 limit)
  for (const char* base : {"12", "1", "213"}) {
    for (std::uint8_t letter = 1; letter <= 3; ++letter) {
      Word w = Word::parse(base);
      w.push_back(letter);
      double prev = kusuoka_z(w).determinant();
      for (int i = 0; i < 10; ++i) {
        w.push_back(letter);
        const double det = kusuoka_z(w).determinant();
        CHECK(det < prev);
        prev = det;
      }
      CHECK(prev < 1e-9);
    }
  }
}

TEST_CASE("metric matrix agrees between the two addresses of a vertex") {
  oracles::Rng rng(17);
  for (int t = 0; t < 40; ++t) {
    const int level = 1 + static_cast<int>(rng.below(6));
    Word w;
    for (int i = 0; i < level; ++i)
      w.push_back(static_cast<std::uint8_t>(1 + rng.below(3)));
    const VertexId v =
        VertexId::canonical(w, 1 + static_cast<int>(rng.below(3)));
    if (v.word.empty()) continue;
    const Eigen::Matrix2d za = kusuoka_z_at_vertex(v, 20);
    const Eigen::Matrix2d zb = kusuoka_z(vertex_address_prefix(v.twin(), 20));
    CHECK((za - zb).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("cell measure: mass, thirds, additivity, positivity") {
  CHECK(kusuoka_measure(Word{}) == doctest::Approx(1.0).epsilon(1e-15));
  for (const char* w : {"1", "2", "3"}) {
    CHECK(kusuoka_measure(Word::parse(w)) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  }
  double worst = 0.0;
  for (int m = 0; m <= 6; ++m) {
    for_each_word(m, [&](const Word& w) {
      double kids = 0.0;
      for (std::uint8_t c = 1; c <= 3; ++c)
        kids += kusuoka_measure(w.appended(c));
      worst = std::max(worst, std::abs(kids - kusuoka_measure(w)));
      CHECK(kusuoka_measure(w) > 0.0);
    });
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("streamed states match the direct formulas") {
  oracles::Rng rng(23);
  KusuokaState st = KusuokaState::root();
  CHECK(st.nu == 1.0);
  CHECK((st.j - Eigen::Matrix2d::Identity()).norm() == 0.0);
  Word w;
  for (int i = 0; i < 20; ++i) {
    const int letter = 1 + static_cast<int>(rng.below(3));
    st = st.child(letter);
    w.push_back(static_cast<std::uint8_t>(letter));
    CHECK((st.j - jw(w)).norm() < 1e-15);
    CHECK(st.nu == doctest::Approx(kusuoka_measure(w)).epsilon(1e-13));
    CHECK((st.z - kusuoka_z(w)).norm() < 1e-13);
  }
}

TEST_CASE("long words are rejected at the public boundary") {
  Word w;
  for (int i = 0; i < 64; ++i) w.push_back(1);
  CHECK_THROWS_AS(w.push_back(1), config_error);
}

TEST_CASE("graph energy needs the function down to the requested level") {
  const auto u = harmonic_extension(Eigen::Vector3d(1.0, 0.0, 0.0), 2);
  CHECK_THROWS_AS(graph_energy(u, 3), config_error);
  CHECK_THROWS_AS(u.at(VertexId::canonical(Word::parse("1111"), 2)),
                  config_error);
}
