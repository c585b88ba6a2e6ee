#pragma once

#include <string_view>

namespace jobgate {

/// Matches [a-z][a-z0-9_]*.
constexpr bool is_lower_identifier(std::string_view s) noexcept {
  if (s.empty() || s.front() < 'a' || s.front() > 'z') return false;
  for (char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

}  // namespace jobgate
