#pragma once

#include <optional>
#include <string>

#include "gasket/geodesic.hpp"

namespace gasket {

/// Standalone SVG of the level-m gasket: one closed path per cell, drawn as
/// the polyline boundary at `side_refine`, plus an optional highlighted
/// geodesic overlay. Byte-deterministic for fixed inputs.
std::string render_svg(Geometry g, int level, int side_refine,
                       const GeodesicPath* overlay = nullptr);

}  // namespace gasket
