#pragma once

#include <charconv>
#include <optional>
#include <string_view>

namespace torelli::detail {

// Whole-string decimal integer; empty on junk or overflow.
inline std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace torelli::detail
