#include "gasket/validate.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gasket/connes.hpp"
#include "gasket/spectrum.hpp"
#include "gasket/svg.hpp"

namespace gasket {

namespace {

// splitmix64: portable deterministic stream for sampled checks.
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

Word random_word(Rng& rng, int length) {
  Word w;
  for (int i = 0; i < length; ++i)
    w.push_back(static_cast<std::uint8_t>(1 + rng.below(3)));
  return w;
}

struct Suite {
  std::vector<CheckResult> results;
  Rng rng;

  explicit Suite(std::uint64_t seed) : rng(seed) {}

  void check(const std::string& name, bool pass, const std::string& detail) {
    results.push_back({name, pass, detail});
  }

  template <typename Fn>
  void run(const std::string& name, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      check(name, false, std::string("exception: ") + e.what());
    }
  }
};

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

std::vector<CheckResult> run_validation_suite(std::uint64_t seed) {
  Suite s(seed);

  s.run("graph-counts", [&] {
    bool ok = true;
    std::string detail;
    for (int m = 0; m <= 5 && ok; ++m) {
      for (Geometry g : {Geometry::euclidean, Geometry::harmonic}) {
        const auto graph = build_length_graph(g, m, 6);
        const long long edges = 3LL * static_cast<long long>(std::pow(3.0, m));
        const long long vertices = (edges + 3) / 2;
        if (graph.edge_count() != edges || graph.vertex_count() != vertices) {
          ok = false;
          detail = "level " + std::to_string(m);
        }
      }
    }
    s.check("graph-counts", ok,
            ok ? "vertex/edge counts match closed forms for m<=5" : detail);
  });

  s.run("addressing", [&] {
    bool ok = true;
    for (int m = 1; m <= 5 && ok; ++m) {
      std::map<VertexId, int> hits;
      for_each_word(m, [&](const Word& w) {
        for (int c = 1; c <= 3; ++c) hits[VertexId::canonical(w, c)]++;
      });
      for (const auto& [v, count] : hits) {
        const int expect = v.word.empty() ? 1 : 2;
        if (count != expect) ok = false;
      }
    }
    s.check("addressing", ok, "2 addresses per interior vertex, 1 per corner");
  });

  s.run("conjugacy", [&] {
    double worst = 0.0;
    const auto& hmaps = harmonic_ifs();
    const auto& qs = base_corners(Geometry::harmonic);
    for (int m = 0; m <= 6; ++m) {
      for_each_word(m, [&](const Word& w) {
        const AffineMap hw = fold_word_map(hmaps, w);
        for (int c = 1; c <= 3; ++c) {
          const Eigen::Vector2d via_phi =
              phi(VertexId::canonical(w, c));
          const Eigen::Vector2d via_maps =
              hw(qs[static_cast<std::size_t>(c - 1)]);
          worst = std::max(worst, (via_phi - via_maps).norm());
        }
      });
    }
    s.check("conjugacy", worst < 1e-10, "max |phi(F_w p) - H_w q| = " + num(worst));
  });

  s.run("energy-conservation", [&] {
    double worst = 0.0;
    for (int b = 0; b < 3; ++b) {
      Eigen::Vector3d boundary = Eigen::Vector3d::Zero();
      boundary[b] = 1.0;
      const auto u = harmonic_extension(boundary, 6);
      for (int k = 0; k <= 6; ++k) {
        worst = std::max(worst, std::abs(graph_energy(u, k) - 2.0));
      }
    }
    s.check("energy-conservation", worst < 1e-10,
            "max |E_k - 2| = " + num(worst) + " over levels 0..6");
  });

  s.run("measure-additivity", [&] {
    double worst = 0.0;
    for (int m = 0; m <= 6; ++m) {
      for_each_word(m, [&](const Word& w) {
        double children = 0.0;
        for (std::uint8_t c = 1; c <= 3; ++c)
          children += kusuoka_measure(w.appended(c));
        worst = std::max(worst, std::abs(children - kusuoka_measure(w)));
      });
    }
    const bool mass = std::abs(kusuoka_measure(Word{}) - 1.0) < 1e-15;
    s.check("measure-additivity", worst < 1e-12 && mass,
            "max residual " + num(worst) + ", total mass 1");
  });

  s.run("metric-matrix", [&] {
    bool ok = true;
    int improved = 0;
    const int trials = 30;
    for (int t = 0; t < trials; ++t) {
      const Word w = random_word(s.rng, 20);
      double small5 = 0.0;
      KusuokaState state = KusuokaState::root();
      for (int d = 1; d <= 20; ++d) {
        state = state.child(w.at(d - 1));
        const Eigen::Matrix2d z = state.z;
        if (std::abs(z.trace() - 1.0) > 1e-12) ok = false;
        if ((z - z.transpose()).norm() > 1e-14) ok = false;
        const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(z);
        if (es.eigenvalues()(0) < -1e-14) ok = false;
        if (d == 5) small5 = es.eigenvalues()(0);
        if (d == 20 && es.eigenvalues()(0) < small5) improved++;
      }
    }
    s.check("metric-matrix", ok && improved >= (trials * 9) / 10,
            "trace/PSD hold; min-eigenvalue shrank in " +
                std::to_string(improved) + "/" + std::to_string(trials));
  });

  s.run("vertex-metric-agreement", [&] {
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      const int level = 1 + static_cast<int>(s.rng.below(2));
      VertexId v = VertexId::canonical(random_word(s.rng, level),
                                       1 + static_cast<int>(s.rng.below(3)));
      if (v.word.empty()) continue;
      const Eigen::Matrix2d za = kusuoka_z_at_vertex(v, 20);
      const Eigen::Matrix2d zb = kusuoka_z(vertex_address_prefix(v.twin(), 20));
      worst = std::max(worst, (za - zb).cwiseAbs().maxCoeff());
    }
    s.check("vertex-metric-agreement", worst < 1e-8,
            "max |Z_20(w) - Z_20(tau)| = " + num(worst));
  });

  s.run("duality", [&] {
    double worst = 0.0;
    double worst_oracle = 0.0;
    for (Geometry g : {Geometry::euclidean, Geometry::harmonic}) {
      for (int m = 0; m <= 2; ++m) {
        const auto graph = build_length_graph(g, m, 8);
        for (int i = 0; i < graph.vertex_count(); ++i) {
          for (int j = i + 1; j < graph.vertex_count(); ++j) {
            const VertexId& p = graph.vertices[static_cast<std::size_t>(i)];
            const VertexId& q = graph.vertices[static_cast<std::size_t>(j)];
            const double dg = geodesic_distance(p, q, graph);
            const double dc = connes_distance(p, q, graph);
            worst = std::max(worst, std::abs(dc - dg) / dg);
            if (graph.vertex_count() <= 30) {
              const double da = connes_distance_ascent(p, q, graph);
              worst_oracle = std::max(worst_oracle, std::abs(da - dg) / dg);
            }
          }
        }
      }
    }
    s.check("duality", worst < 1e-9 && worst_oracle < 1e-9,
            "max rel gap " + num(worst) + ", ascent oracle " +
                num(worst_oracle));
  });

  s.run("duality-sampled", [&] {
    double worst = 0.0;
    for (Geometry g : {Geometry::euclidean, Geometry::harmonic}) {
      for (int m = 3; m <= 4; ++m) {
        const auto graph = build_length_graph(g, m, 8);
        for (int t = 0; t < 20; ++t) {
          const int i = static_cast<int>(s.rng.below(
              static_cast<std::uint64_t>(graph.vertex_count())));
          int j = static_cast<int>(s.rng.below(
              static_cast<std::uint64_t>(graph.vertex_count())));
          if (i == j) j = (j + 1) % graph.vertex_count();
          const VertexId& p = graph.vertices[static_cast<std::size_t>(i)];
          const VertexId& q = graph.vertices[static_cast<std::size_t>(j)];
          const double dg = geodesic_distance(p, q, graph);
          const double dc = connes_distance(p, q, graph);
          worst = std::max(worst, std::abs(dc - dg) / dg);
        }
      }
    }
    s.check("duality-sampled", worst < 1e-9, "max rel gap " + num(worst));
  });

  s.run("metric-axioms", [&] {
    bool ok = true;
    for (Geometry g : {Geometry::euclidean, Geometry::harmonic}) {
      const auto graph = build_length_graph(g, 2, 8);
      const int n = graph.vertex_count();
      std::vector<std::vector<double>> d(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        d[static_cast<std::size_t>(i)] = shortest_paths(graph, i).dist;
      for (int i = 0; i < n && ok; ++i) {
        for (int j = 0; j < n && ok; ++j) {
          if ((i == j) != (d[i][static_cast<std::size_t>(j)] == 0.0)) ok = false;
          if (std::abs(d[i][static_cast<std::size_t>(j)] -
                       d[static_cast<std::size_t>(j)][static_cast<std::size_t>(
                           i)]) > 1e-12)
            ok = false;
          for (int k = 0; k < n && ok; ++k) {
            if (d[i][static_cast<std::size_t>(j)] >
                d[i][static_cast<std::size_t>(k)] +
                    d[static_cast<std::size_t>(k)]
                     [static_cast<std::size_t>(j)] + 1e-12)
              ok = false;
          }
        }
      }
      // Euclidean graph distance dominates the ambient distance.
      if (g == Geometry::euclidean) {
        for (int i = 0; i < n && ok; ++i)
          for (int j = 0; j < n && ok; ++j)
            if (d[i][static_cast<std::size_t>(j)] + 1e-12 <
                (graph.positions[static_cast<std::size_t>(i)] -
                 graph.positions[static_cast<std::size_t>(j)])
                    .norm())
              ok = false;
      }
    }
    s.check("metric-axioms", ok,
            "identity, symmetry, triangle, ambient bound at level 2");
  });

  s.run("edge-geodesic", [&] {
    bool ok = true;
    for (Geometry g : {Geometry::euclidean, Geometry::harmonic}) {
      for (int m = 0; m <= 3 && ok; ++m) {
        const auto graph = build_length_graph(g, m, 8);
        for (const auto& e : graph.edges) {
          const auto sp = shortest_paths(graph, e.a);
          if (sp.dist[static_cast<std::size_t>(e.b)] != e.length) ok = false;
        }
      }
    }
    s.check("edge-geodesic", ok, "every edge is a geodesic at its own level");
  });

  s.run("polyline-lengths", [&] {
    bool increasing = true;
    bool additive = true;
    for (int m = 0; m <= 1; ++m) {
      for_each_word(m, [&](const Word& w) {
        for (Side side : {Side::l, Side::r, Side::b}) {
          const EdgeId e{w, side};
          double prev = edge_length_harmonic(e, 1);
          for (int k = 2; k <= 8; ++k) {
            const double len = edge_length_harmonic(e, k);
            if (!(len > prev)) increasing = false;
            prev = len;
          }
          const auto kids = e.children();
          if (edge_length_harmonic(e, 6) !=
              edge_length_harmonic(kids[0], 5) +
                  edge_length_harmonic(kids[1], 5))
            additive = false;
        }
      });
    }
    s.check("polyline-lengths", increasing && additive,
            "refinement monotone, child additivity exact");
  });

  s.run("spectrum", [&] {
    bool ok = true;
    for (int t = 0; t < 10; ++t) {
      const Geometry g =
          s.rng.below(2) == 0 ? Geometry::euclidean : Geometry::harmonic;
      const int max_level = static_cast<int>(s.rng.below(3));
      const double cutoff = 2.0 + 50.0 * s.rng.unit();
      const auto seq = LengthSequence::edges(g, max_level, 8);
      const auto spec = eigenvalues(seq, cutoff);
      if (spec.values.size() != counting_function(seq, cutoff)) ok = false;
      // multiset symmetry
      std::vector<double> pos, neg;
      for (const auto& v : spec.values) {
        (v.lambda > 0 ? pos : neg).push_back(std::abs(v.lambda));
      }
      std::sort(pos.begin(), pos.end());
      std::sort(neg.begin(), neg.end());
      if (pos != neg) ok = false;
      if (!spec.values.empty()) {
        double mn = std::numeric_limits<double>::infinity();
        for (const auto& v : spec.values) mn = std::min(mn, std::abs(v.lambda));
        if (mn != std::numbers::pi / (2.0 * seq.max_alpha())) ok = false;
      }
    }
    s.check("spectrum", ok, "symmetry, closed-form count, minimum gap");
  });

  s.run("commutator", [&] {
    bool ok = true;
    for (int t = 0; t < 5; ++t) {
      const double a = 2.0 * s.rng.unit() - 1.0;
      const double b = 2.0 * s.rng.unit() - 1.0;
      for (Geometry g : {Geometry::euclidean, Geometry::harmonic}) {
        const double bound =
            commutator_bound_linear(Eigen::Vector2d(a, b), g, 3, 6);
        if (bound > std::abs(a) + std::abs(b) + 1e-9) ok = false;
      }
    }
    s.check("commutator", ok, "derivative sup within |a|+|b|");
  });

  s.run("witness-seminorm", [&] {
    bool ok = true;
    for (Geometry g : {Geometry::euclidean, Geometry::harmonic}) {
      const auto graph = build_length_graph(g, 2, 8);
      const VertexId p = graph.vertices[s.rng.below(
          static_cast<std::uint64_t>(graph.vertex_count()))];
      const auto h = witness_function(p, graph);
      if (h.at(p) != 0.0) ok = false;
      const auto pair = seminorm_equality_check(h, graph);
      if (std::abs(pair.edge_sup - 1.0) > 1e-12) ok = false;
      if (std::abs(pair.pairwise_sup - 1.0) > 1e-12) ok = false;
    }
    s.check("witness-seminorm", ok, "witness attains unit seminorm both ways");
  });

  s.run("euclid-dimension", [&] {
    const auto seq = LengthSequence::edges(Geometry::euclidean, 8, 0);
    const auto report = spectral_dimension(seq, 1, 8);
    const double expect = std::log(3.0) / std::log(2.0);
    s.check("euclid-dimension", std::abs(report.estimate - expect) < 1e-3,
            "estimate " + num(report.estimate) + " vs log3/log2");
  });

  s.run("render-determinism", [&] {
    const std::string a = render_svg(Geometry::harmonic, 2, 4);
    const std::string b = render_svg(Geometry::harmonic, 2, 4);
    s.check("render-determinism", a == b && a.find("<svg") != std::string::npos,
            "byte-identical across runs");
  });

  return s.results;
}

}  // namespace gasket
