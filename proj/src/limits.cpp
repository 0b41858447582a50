#include "hypo/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace hypo {

  Limits limits_from_env() {
    Limits limits;
    auto read = [](char const* name, std::size_t& target) {
      char const* value = std::getenv(name);
      if (value == nullptr) {
        return;
      }
      std::string_view s(value);
      std::size_t parsed = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), parsed);
      if (ec == std::errc() && ptr == s.data() + s.size() && parsed > 0) {
        target = parsed;
      }
    };
    read("HYPO_MAX_CLASS_SIZE", limits.max_class_size);
    read("HYPO_MAX_FRONTIER", limits.max_frontier);
    read("HYPO_MAX_ASSIGNMENTS", limits.max_assignments);
    read("HYPO_MAX_PATTERNS", limits.max_patterns);
    return limits;
  }

}  // namespace hypo
