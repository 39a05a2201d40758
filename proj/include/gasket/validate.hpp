#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gasket/types.hpp"

namespace gasket {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Cross-module invariant suite behind the `validate` subcommand. Sampled
// checks draw from the given seed; the suite is deterministic per seed.
std::vector<CheckResult> run_validation_suite(std::uint64_t seed);

}  // namespace gasket
