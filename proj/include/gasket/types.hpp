#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gasket {

inline constexpr const char* kArtifactVersion = "0.1.0";

enum class Geometry { euclidean, harmonic };

// Side of a triangular cell. Enumeration order is l < r < b throughout.
enum class Side : int { l = 0, r = 1, b = 2 };

const char* to_string(Geometry g);
const char* to_string(Side s);
bool geometry_from_string(const std::string& text, Geometry& out);
bool side_from_string(const std::string& text, Side& out);

// Default resource budgets. Callers can pass tighter or looser values; the
// point is that oversize requests fail loudly instead of truncating.
inline constexpr std::size_t kMaxGraphEdges = 200'000;
inline constexpr std::size_t kMaxStreamItems = 1'000'000;
inline constexpr std::size_t kMaxSpectrumValues = 4'000'000;
inline constexpr int kMaxWordLetters = 64;
inline constexpr int kMaxRefine = 22;
inline constexpr int kDefaultRefine = 12;

struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gasket
