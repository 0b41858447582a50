#pragma once

#include <cstddef>

namespace hypo {

  // Default bounds for the exhaustive procedures. Every procedure that
  // enumerates a space takes its bound as a parameter; these are the values
  // used when the caller does not pass one.
  inline constexpr std::size_t kDefaultMaxClassSize   = 1'000'000;
  inline constexpr std::size_t kDefaultMaxFrontier    = 1'000'000;
  inline constexpr std::size_t kDefaultMaxAssignments = 50'000'000;
  inline constexpr std::size_t kDefaultMaxPatterns    = 20'000'000;

  struct Limits {
    std::size_t max_class_size  = kDefaultMaxClassSize;
    std::size_t max_frontier    = kDefaultMaxFrontier;
    std::size_t max_assignments = kDefaultMaxAssignments;
    std::size_t max_patterns    = kDefaultMaxPatterns;
  };

  // Reads HYPO_MAX_CLASS_SIZE, HYPO_MAX_FRONTIER, HYPO_MAX_ASSIGNMENTS and
  // HYPO_MAX_PATTERNS; unset or unparsable variables keep their defaults.
  Limits limits_from_env();

}  // namespace hypo
