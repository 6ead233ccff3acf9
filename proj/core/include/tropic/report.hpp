#pragma once

#include <cstdint>

namespace tropic {

/// Outcome of a randomized verification run. Reproducible: every trial draws
/// from a sub-generator derived from (seed, trial index), so the report does
/// not depend on scheduling.
struct VerificationReport {
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  double worst_margin = 0.0;  // most positive observed excess over the bound
  std::uint64_t seed = 0;

  bool passed() const noexcept { return violations == 0; }
};

}  // namespace tropic
