#pragma once

#include <cstddef>
#include <cstdint>

namespace syncaut {

/// Resource limits for the exponential constructions.
struct Limits {
  /// Maximum number of subset states built by a subset construction.
  std::size_t subset_cap = std::size_t{1} << 20;
  /// Maximum number of image-set pairs visited by an inclusion search.
  std::size_t pair_cap = std::size_t{1} << 22;
  /// Maximum number of raw transition tables the reset-complexity search may enumerate.
  std::uint64_t enumeration_budget = std::uint64_t{1} << 27;
};

}  // namespace syncaut
