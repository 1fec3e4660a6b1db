#pragma once

#include <algorithm>
#include <limits>

namespace polytrig {

/// Closed interval [lo, hi] known to contain a quantity.
struct Enclosure {
  double lo = 0.0;
  double hi = 0.0;

  [[nodiscard]] constexpr double width() const noexcept { return hi - lo; }
  [[nodiscard]] constexpr double midpoint() const noexcept { return lo + 0.5 * (hi - lo); }
  [[nodiscard]] constexpr bool contains(double v) const noexcept { return lo <= v && v <= hi; }

  /// True if this interval lies inside `outer`.
  [[nodiscard]] constexpr bool within(const Enclosure& outer) const noexcept {
    return outer.lo <= lo && hi <= outer.hi;
  }

  [[nodiscard]] constexpr Enclosure scaled(double k) const noexcept {
    // k > 0 only; every caller scales lengths by a positive factor.
    return {lo * k, hi * k};
  }

  /// Intersection of two enclosures of the same quantity.
  [[nodiscard]] constexpr Enclosure intersect(const Enclosure& other) const noexcept {
    return {std::max(lo, other.lo), std::min(hi, other.hi)};
  }

  friend constexpr bool operator==(const Enclosure&, const Enclosure&) = default;
};

namespace detail {

// Relative padding applied to every computed bracket. The chord recurrence
// accumulates a few ulps per level and levels are capped at 63, so this
// covers the rounding of both arms with room to spare.
inline constexpr double kRoundingSlack = 512.0 * std::numeric_limits<double>::epsilon();

[[nodiscard]] constexpr Enclosure pad_outward(double lo, double hi) noexcept {
  return {lo - kRoundingSlack * lo, hi + kRoundingSlack * hi};
}

}  // namespace detail
}  // namespace polytrig
