#pragma once

// Points, chords and origin triangles on the closed first-quadrant arc of
// the unit circle. A point is identified by its ordinate; the abscissa is
// always sqrt(1 - y^2).
//
// Near y = 1 the abscissa carries only absolute (not relative) accuracy.
// Every formula downstream needs absolute accuracy only.

#include <cmath>
#include <compare>

#include "polytrig/detail/format.hpp"
#include "polytrig/errors.hpp"

namespace polytrig {

class CirclePoint {
 public:
  [[nodiscard]] constexpr double y() const noexcept { return y_; }
  [[nodiscard]] constexpr double x() const noexcept { return x_; }

  friend constexpr bool operator==(const CirclePoint& p, const CirclePoint& q) noexcept {
    return p.y_ == q.y_;
  }

 private:
  constexpr CirclePoint(double y, double x) noexcept : y_(y), x_(x) {}
  friend CirclePoint point_from_ordinate(double y);

  double y_;
  double x_;
};

/// Point (sqrt(1 - y^2), y). Throws DomainError unless 0 <= y <= 1.
inline CirclePoint point_from_ordinate(double y) {
  if (!(y >= 0.0 && y <= 1.0)) {
    throw DomainError("ordinate must lie in [0, 1], got " + detail::format_double(y));
  }
  // (1 - y)(1 + y) keeps full accuracy near y = 1 where 1 - y*y cancels.
  return CirclePoint(y, std::sqrt((1.0 - y) * (1.0 + y)));
}

/// The endpoints of the quarter circle.
inline CirclePoint quarter_top() { return point_from_ordinate(1.0); }
inline CirclePoint quarter_bottom() { return point_from_ordinate(0.0); }

/// Total order on the quarter circle: larger ordinate is "greater".
[[nodiscard]] constexpr std::strong_ordering compare_by_ordinate(const CirclePoint& p,
                                                                 const CirclePoint& q) noexcept {
  if (p.y() < q.y()) return std::strong_ordering::less;
  if (p.y() > q.y()) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

/// Euclidean distance between two points of the quarter circle.
///
/// The abscissa difference is rewritten as (yq - yp)(yq + yp) / (xp + xq) so
/// that nearby points do not lose relative accuracy to cancellation; the
/// ordinates are exact, so the result is accurate to a few ulps relative.
[[nodiscard]] inline double chord_length(const CirclePoint& p, const CirclePoint& q) noexcept {
  if (p.y() == q.y()) return 0.0;
  const double dy = p.y() - q.y();
  const double xsum = p.x() + q.x();
  // xsum == 0 only when both points are (0, 1), handled above.
  const double dx = dy * (p.y() + q.y()) / xsum;
  return std::hypot(dx, dy);
}

/// Distance from the origin to the line through a chord of length `chord`,
/// from h^2 + (chord/2)^2 = 1.
[[nodiscard]] inline double height_from_chord(double chord) noexcept {
  const double half = 0.5 * chord;
  return std::sqrt((1.0 - half) * (1.0 + half));
}

/// Height at O of the triangle p O q. Throws DegenerateArcError if p == q.
inline double height_at_origin(const CirclePoint& p, const CirclePoint& q) {
  if (p == q) {
    throw DegenerateArcError("height at origin needs two distinct points, both at y = " +
                             detail::format_double(p.y()));
  }
  return height_from_chord(chord_length(p, q));
}

/// Chord with its endpoints in canonical order (hi has the larger ordinate).
struct Chord {
  CirclePoint hi;
  CirclePoint lo;
  double length;
};

[[nodiscard]] inline Chord make_chord(const CirclePoint& p, const CirclePoint& q) noexcept {
  if (compare_by_ordinate(p, q) == std::strong_ordering::less) return {q, p, chord_length(q, p)};
  return {p, q, chord_length(p, q)};
}

struct TriangleAtOrigin {
  Chord base;
  double height;

  [[nodiscard]] double area() const noexcept { return 0.5 * base.length * height; }
};

inline TriangleAtOrigin make_triangle(const CirclePoint& p, const CirclePoint& q) {
  const Chord c = make_chord(p, q);
  if (c.length == 0.0) {
    throw DegenerateArcError("triangle at origin needs two distinct points");
  }
  return {c, height_from_chord(c.length)};
}

}  // namespace polytrig
