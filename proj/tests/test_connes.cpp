#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "gasket/connes.hpp"
#include "oracles.hpp"

using namespace gasket;

TEST_CASE("base triangle: program optimum is the edge length") {
  const auto g = build_length_graph(Geometry::euclidean, 0, 0);
  const VertexId p1{Word{}, 1};
  const VertexId p2{Word{}, 2};
  CHECK(connes_distance(p1, p2, g) == 1.0);
  CHECK(connes_distance_ascent(p1, p2, g) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(connes_distance_ascent(p1, p1, g) == 0.0);
  CHECK(connes_distance(p1, p1, g) == 0.0);
}

TEST_CASE("duality: program equals shortest paths on all small graphs") {
  for (Geometry g : {Geometry::euclidean, Geometry::harmonic}) {
    for (int m = 0; m <= 2; ++m) {
      const auto graph = build_length_graph(g, m, 8);
      for (int i = 0; i < graph.vertex_count(); ++i) {
        for (int j = i + 1; j < graph.vertex_count(); ++j) {
          const VertexId& p = graph.vertices[static_cast<std::size_t>(i)];
          const VertexId& q = graph.vertices[static_cast<std::size_t>(j)];
          const double dg = geodesic_distance(p, q, graph);
          const double dc = connes_distance(p, q, graph);
          const double da = connes_distance_ascent(p, q, graph);
          CHECK(std::abs(dc - dg) / dg < 1e-9);
          CHECK(std::abs(da - dg) / dg < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("harmonic level 2: sampled pairs agree to 1e-9 relative") {
  const auto graph = build_length_graph(Geometry::harmonic, 2, 12);
  oracles::Rng rng(47);
  for (int t = 0; t < 10; ++t) {
    const int i = static_cast<int>(
        rng.below(static_cast<std::uint64_t>(graph.vertex_count())));
    int j = static_cast<int>(
        rng.below(static_cast<std::uint64_t>(graph.vertex_count())));
    if (i == j) j = (j + 1) % graph.vertex_count();
    const VertexId& p = graph.vertices[static_cast<std::size_t>(i)];
    const VertexId& q = graph.vertices[static_cast<std::size_t>(j)];
    const double dg = geodesic_distance(p, q, graph);
    CHECK(std::abs(connes_distance(p, q, graph) - dg) / dg < 1e-9);
  }
}

TEST_CASE("the ascent oracle refuses big graphs") {
  const auto graph = build_length_graph(Geometry::euclidean, 3, 0);
  REQUIRE(graph.vertex_count() > 30);
  CHECK_THROWS_AS(connes_distance_ascent(graph.vertices[0], graph.vertices[1],
                                         graph),
                  config_error);
}

TEST_CASE("witness function: Lipschitz feasibility and attained optimum") {
  for (Geometry g : {Geometry::euclidean, Geometry::harmonic}) {
    const auto graph = build_length_graph(g, 2, 8);
    const VertexId p = graph.vertices[4];
    const auto h = witness_function(p, graph);
    CHECK(h.at(p) == 0.0);

    // per-edge Lipschitz constant <= 1; attained along a geodesic edge
    double sup = 0.0;
    for (const auto& e : graph.edges) {
      const double ratio =
          std::abs(h.at(graph.vertices[static_cast<std::size_t>(e.a)]) -
                   h.at(graph.vertices[static_cast<std::size_t>(e.b)])) /
          e.length;
      CHECK(ratio <= 1.0 + 1e-12);
      sup = std::max(sup, ratio);
    }
    CHECK(sup == doctest::Approx(1.0).epsilon(1e-12));

    // feasibility for the program and optimality at every target
    for (int j = 0; j < graph.vertex_count(); ++j) {
      const VertexId& q = graph.vertices[static_cast<std::size_t>(j)];
      const auto prog = make_lipschitz_program(q, p, graph);
      std::vector<double> f(static_cast<std::size_t>(graph.vertex_count()));
      for (int i = 0; i < graph.vertex_count(); ++i)
        f[static_cast<std::size_t>(i)] =
            h.at(graph.vertices[static_cast<std::size_t>(i)]);
      CHECK(is_feasible(prog, f, 1e-12));
      CHECK(h.at(q) == doctest::Approx(geodesic_distance(p, q, graph))
                           .epsilon(1e-12));
    }
  }
}

TEST_CASE("seminorm: edge and pairwise suprema coincide") {
  const auto graph = build_length_graph(Geometry::euclidean, 2, 0);

  VertexFunction constant;
  constant.level = graph.level;
  for (const auto& v : graph.vertices) constant.values[v] = 3.25;
  const auto sc = seminorm_equality_check(constant, graph);
  CHECK(sc.edge_sup == 0.0);
  CHECK(sc.pairwise_sup == 0.0);

  const auto h = witness_function(graph.vertices[0], graph);
  const auto sw = seminorm_equality_check(h, graph);
  CHECK(sw.edge_sup == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sw.pairwise_sup == doctest::Approx(1.0).epsilon(1e-12));

  // linear functional x restricted to vertices
  VertexFunction linear;
  linear.level = graph.level;
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    linear.values[graph.vertices[i]] = graph.positions[i].x();
  }
  const auto sl = seminorm_equality_check(linear, graph);
  CHECK(sl.edge_sup == doctest::Approx(sl.pairwise_sup).epsilon(1e-12));
  CHECK(sl.edge_sup <= 1.0 + 1e-12);
}

TEST_CASE("scaling covariance: distances are homogeneous in the lengths") {
  const auto graph = build_length_graph(Geometry::harmonic, 2, 8);
  const double c = 2.75;
  LengthGraph scaled = graph;
  for (auto& e : scaled.edges) e.length *= c;
  for (auto& bucket : scaled.adjacency) {
    for (auto& adj : bucket) adj.length *= c;
  }
  oracles::Rng rng(53);
  for (int t = 0; t < 10; ++t) {
    const int i = static_cast<int>(
        rng.below(static_cast<std::uint64_t>(graph.vertex_count())));
    int j = static_cast<int>(
        rng.below(static_cast<std::uint64_t>(graph.vertex_count())));
    if (i == j) continue;
    const VertexId& p = graph.vertices[static_cast<std::size_t>(i)];
    const VertexId& q = graph.vertices[static_cast<std::size_t>(j)];
    CHECK(connes_distance(p, q, scaled) ==
          doctest::Approx(c * connes_distance(p, q, graph)).epsilon(1e-12));
  }
}
