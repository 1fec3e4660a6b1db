#pragma once

#include <array>
#include <charconv>
#include <string>

namespace polytrig::detail {

/// Shortest decimal form that reads back to the same double.
inline std::string format_double(double v) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) return "?";
  return {buf.data(), end};
}

}  // namespace polytrig::detail
