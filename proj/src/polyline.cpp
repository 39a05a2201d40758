#include "gasket/polyline.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace gasket {

double Polyline::chord_sum() const {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    total += (points[i + 1] - points[i]).norm();
  }
  return total;
}

namespace {

void check_refine(int refine) {
  if (refine < 0) throw config_error("refinement depth must be nonnegative");
  if (refine > kMaxRefine) throw budget_error("refinement depth over budget");
}

// Binary subdivision of an edge, composing the cell map stepwise so that a
// parent traversal at depth k+1 and the two child traversals at depth k
// perform identical float operations. Returns the leaf-chord sum: each leaf
// contributes |M(q_b) - M(q_a)| and inner nodes add left + right, which makes
// parent length == child_a length + child_b length hold bit-for-bit.
double subdivide_edge(const IfsFamily& maps, const AffineMap& m, int la,
                      int lb, const Eigen::Vector2d& qa,
                      const Eigen::Vector2d& qb, int depth, bool rightmost,
                      std::vector<Eigen::Vector2d>* points) {
  if (depth == 0) {
    const Eigen::Vector2d pa = m(qa);
    if (points) points->push_back(pa);
    const Eigen::Vector2d pb = m(qb);
    if (points && rightmost) points->push_back(pb);
    return (pb - pa).norm();
  }
  const double left =
      subdivide_edge(maps, compose(m, maps[static_cast<std::size_t>(la - 1)]),
                     la, lb, qa, qb, depth - 1, false, points);
  const double right =
      subdivide_edge(maps, compose(m, maps[static_cast<std::size_t>(lb - 1)]),
                     la, lb, qa, qb, depth - 1, rightmost, points);
  return left + right;
}

double edge_length_impl(Geometry g, const EdgeId& e, int refine,
                        std::vector<Eigen::Vector2d>* points) {
  check_refine(refine);
  const auto& maps = ifs_for(g);
  const auto& corners = base_corners(g);
  const auto [a, b] = EdgeId::side_corners(e.side);
  const AffineMap base = fold_word_map(maps, e.cell);
  return subdivide_edge(maps, base, a, b,
                        corners[static_cast<std::size_t>(a - 1)],
                        corners[static_cast<std::size_t>(b - 1)], refine, true,
                        points);
}

}  // namespace

double edge_chord(Geometry g, const EdgeId& e) {
  return edge_length_impl(g, e, 0, nullptr);
}

double edge_length(Geometry g, const EdgeId& e, int refine) {
  return edge_length_impl(g, e, refine, nullptr);
}

double edge_length_harmonic(const EdgeId& e, int refine) {
  return edge_length(Geometry::harmonic, e, refine);
}

Polyline edge_polyline(Geometry g, const EdgeId& e, int refine) {
  Polyline p;
  p.points.reserve((static_cast<std::size_t>(1) << refine) + 1);
  p.length = edge_length_impl(g, e, refine, &p.points);
  return p;
}

Polyline edge_polyline_harmonic(const EdgeId& e, int refine) {
  return edge_polyline(Geometry::harmonic, e, refine);
}

std::shared_ptr<const std::vector<double>> level_edge_lengths(Geometry g,
                                                              int level,
                                                              int refine) {
  if (level < 0) throw config_error("level must be nonnegative");
  check_refine(refine);

  static std::mutex mu;
  static std::map<std::tuple<Geometry, int, int>,
                  std::shared_ptr<const std::vector<double>>>
      memo;
  const auto key = std::make_tuple(g, level, refine);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  auto lengths = std::make_shared<std::vector<double>>();
  const std::size_t cells = static_cast<std::size_t>(std::pow(3.0, level));
  lengths->reserve(cells * 3);

  if (g == Geometry::euclidean) {
    const double len = std::ldexp(1.0, -level);
    lengths->assign(cells * 3, len);
  } else {
    const auto& maps = harmonic_ifs();
    const auto& corners = base_corners(Geometry::harmonic);
    // Walk the cell tree composing maps left-fold style; per cell this
    // matches fold_word_map bit-for-bit.
    auto walk = [&](auto&& self, const AffineMap& m, int depth) -> void {
      if (depth == level) {
        for (Side s : {Side::l, Side::r, Side::b}) {
          const auto [a, b] = EdgeId::side_corners(s);
          lengths->push_back(subdivide_edge(
              maps, m, a, b, corners[static_cast<std::size_t>(a - 1)],
              corners[static_cast<std::size_t>(b - 1)], refine, true,
              nullptr));
        }
        return;
      }
      for (int letter = 1; letter <= 3; ++letter) {
        self(self, compose(m, maps[static_cast<std::size_t>(letter - 1)]),
             depth + 1);
      }
    };
    walk(walk, AffineMap{}, 0);
  }

  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = memo.emplace(key, std::move(lengths));
  return it->second;
}

AddressedPolyline edge_addressed_polyline(const EdgeId& e, int refine,
                                          int z_depth) {
  check_refine(refine);
  if (z_depth < 1 || z_depth > kMaxWordLetters)
    throw config_error("z depth outside [1, 64]");

  AddressedPolyline out;
  const Polyline poly = edge_polyline_harmonic(e, refine);
  out.points = poly.points;

  const auto [a, b] = EdgeId::side_corners(e.side);
  const std::size_t segments = static_cast<std::size_t>(1) << refine;
  out.segment_words.reserve(segments);
  for (std::size_t j = 0; j < segments; ++j) {
    // Midpoint address of segment j: the subdivision word from the binary
    // digits of j, then the b-side letter once, then a-side letters.
    Word w = e.cell;
    for (int bit = refine - 1; bit >= 0 && w.length() < z_depth; --bit) {
      const bool one = (j >> bit) & 1u;
      w.push_back(static_cast<std::uint8_t>(one ? b : a));
    }
    if (w.length() < z_depth) w.push_back(static_cast<std::uint8_t>(b));
    while (w.length() < z_depth) w.push_back(static_cast<std::uint8_t>(a));
    out.segment_words.push_back(w.prefix(z_depth));
  }
  return out;
}

}  // namespace gasket
