#pragma once

#include <cstdint>
#include <string>

#include "gasket/spectrum.hpp"

namespace gasket {

/// Knobs shared by the command-line surface. Round-trips losslessly through
/// its JSON form.
struct RunConfig {
  Geometry geometry = Geometry::euclidean;
  int level = 2;
  int refine = kDefaultRefine;
  double cutoff = 50.0;
  TripleKind kind = TripleKind::edge;
  std::string format = "json";  // json | csv | svg
  std::string cache_dir;        // empty = caching disabled
  std::uint64_t seed = 1;
  int level_lo = 1;
  int level_hi = 8;
  std::size_t edge_budget = kMaxGraphEdges;
  std::size_t spectrum_budget = kMaxSpectrumValues;

  // Throws config_error when a parameter is outside its documented budget.
  void validate() const;

  std::string to_json_text() const;
  static RunConfig from_json_text(const std::string& text);

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

}  // namespace gasket
