#include "gasket/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace gasket {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

struct Bounds {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -std::numeric_limits<double>::infinity();
  double ymin = std::numeric_limits<double>::infinity();
  double ymax = -std::numeric_limits<double>::infinity();

  void include(const Eigen::Vector2d& p) {
    xmin = std::min(xmin, p.x());
    xmax = std::max(xmax, p.x());
    ymin = std::min(ymin, p.y());
    ymax = std::max(ymax, p.y());
  }
};

// One closed cell boundary: bottom 1->2, right 2->3, left reversed 3->1.
std::vector<Eigen::Vector2d> cell_outline(Geometry g, const Word& cell,
                                          int side_refine) {
  std::vector<Eigen::Vector2d> pts;
  const Polyline bottom = edge_polyline(g, EdgeId{cell, Side::b}, side_refine);
  const Polyline right = edge_polyline(g, EdgeId{cell, Side::r}, side_refine);
  const Polyline left = edge_polyline(g, EdgeId{cell, Side::l}, side_refine);
  pts.insert(pts.end(), bottom.points.begin(), bottom.points.end());
  pts.insert(pts.end(), right.points.begin() + 1, right.points.end());
  pts.insert(pts.end(), left.points.rbegin() + 1, left.points.rend());
  return pts;
}

}  // namespace

std::string render_svg(Geometry g, int level, int side_refine,
                       const GeodesicPath* overlay) {
  if (level < 0 || level > 8) throw config_error("render level outside [0, 8]");
  if (side_refine < 0 || side_refine > 8)
    throw config_error("side refinement outside [0, 8]");

  std::vector<std::vector<Eigen::Vector2d>> cells;
  for_each_word(level, [&](const Word& w) {
    cells.push_back(cell_outline(g, w, side_refine));
  });

  std::vector<std::vector<Eigen::Vector2d>> overlay_lines;
  if (overlay) {
    for (const auto& e : overlay->edges) {
      overlay_lines.push_back(edge_polyline(g, e, side_refine).points);
    }
  }

  Bounds b;
  for (const auto& outline : cells)
    for (const auto& p : outline) b.include(p);
  for (const auto& line : overlay_lines)
    for (const auto& p : line) b.include(p);

  const double pad = 0.05 * std::max(b.xmax - b.xmin, b.ymax - b.ymin);
  const double w = (b.xmax - b.xmin) + 2 * pad;
  const double h = (b.ymax - b.ymin) + 2 * pad;
  // SVG y grows downward; flip about the bounding box.
  const auto tx = [&](const Eigen::Vector2d& p) {
    return Eigen::Vector2d(p.x() - b.xmin + pad, b.ymax - p.y() + pad);
  };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + fmt(w) +
         " " + fmt(h) + "\" width=\"720\">\n";
  out += "<style>.cell{fill:none;stroke:#333333;stroke-width:" +
         fmt(h / 600.0) + "}.geodesic{fill:none;stroke:#cc2222;stroke-width:" +
         fmt(h / 200.0) + "}</style>\n";

  for (const auto& outline : cells) {
    out += "<path class=\"cell\" d=\"";
    for (std::size_t i = 0; i < outline.size(); ++i) {
      const Eigen::Vector2d p = tx(outline[i]);
      out += (i == 0 ? "M" : " L");
      out += fmt(p.x()) + " " + fmt(p.y());
    }
    out += " Z\"/>\n";
  }

  if (!overlay_lines.empty()) {
    out += "<path class=\"geodesic\" d=\"";
    for (std::size_t j = 0; j < overlay_lines.size(); ++j) {
      const auto& line = overlay_lines[j];
      for (std::size_t i = 0; i < line.size(); ++i) {
        const Eigen::Vector2d p = tx(line[i]);
        out += (i == 0 ? (j == 0 ? "M" : " M") : " L");
        out += fmt(p.x()) + " " + fmt(p.y());
      }
    }
    out += "\"/>\n";
  }

  out += "</svg>\n";
  return out;
}

}  // namespace gasket
