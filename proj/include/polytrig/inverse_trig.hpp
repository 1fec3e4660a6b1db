#pragma once

// arcsin as an arc length, pi from the quarter arc, and sin by inverting
// arcsin on [0, 1].

#include <cmath>
#include <string>
#include <utility>

#include "polytrig/arclength.hpp"

namespace polytrig {

/// Length of the arc from (sqrt(1 - y^2), y) down to (1, 0); zero at y = 0.
inline CertifiedValue arcsin(double y, double tol, int max_iter = kDefaultIterationCap) {
  if (!(y >= 0.0 && y <= 1.0)) {
    throw DomainError("arcsin argument must lie in [0, 1], got " + detail::format_double(y));
  }
  return arc_length(point_from_ordinate(y), quarter_bottom(), tol, max_iter);
}

/// Twice the quarter-circle arc. The report is that of the quarter arc; the
/// enclosure is already doubled.
inline CertifiedValue pi_certified(double tol, int max_iter = kDefaultIterationCap) {
  CertifiedValue quarter = arcsin(1.0, tol, max_iter);
  quarter.enclosure = quarter.enclosure.scaled(2.0);
  return quarter;
}

inline Enclosure pi_constant(double tol, int max_iter = kDefaultIterationCap) {
  return pi_certified(tol, max_iter).enclosure;
}

struct SineResult {
  double value = 0.0;
  int bisection_steps = 0;
  CertifiedValue arcsin_at_value;
};

/// The ordinate y in [0, 1] whose arcsin is x, by bisection on y.
///
/// arcsin is evaluated to tol/4 and the bracket on y is halved until the
/// arcsin midpoints at its ends differ by at most tol; the nearer end is
/// returned, so |arcsin(y) - x| <= tol. Near y = 1 arcsin is steeper than the
/// double grid can follow; there the search stops at adjacent doubles and
/// returns the better one.
inline SineResult sin_detailed(double x, double tol, int max_iter = kDefaultIterationCap) {
  detail::check_tolerance(tol);
  const double top = arcsin(1.0, tol, max_iter).enclosure.hi;
  if (!(x >= 0.0 && x <= top)) {
    throw DomainError("sin argument must lie in [0, " + detail::format_double(top) + "], got " +
                      detail::format_double(x));
  }
  const double inner_tol = 0.25 * tol;
  auto f = [&](double y) { return arcsin(y, inner_tol, max_iter); };

  double lo = 0.0;
  double hi = 1.0;
  CertifiedValue at_lo = f(lo);
  CertifiedValue at_hi = f(hi);
  if (x <= at_lo.enclosure.midpoint()) return {lo, 0, at_lo};
  if (x >= at_hi.enclosure.midpoint()) return {hi, 0, at_hi};

  constexpr int kMaxSteps = 2000;
  int steps = 0;
  while (at_hi.enclosure.midpoint() - at_lo.enclosure.midpoint() > tol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (++steps > kMaxSteps) {
      throw NonConvergenceError("sin bisection did not settle after " + std::to_string(kMaxSteps) +
                                    " steps",
                                {lo, hi});
    }
    CertifiedValue at_mid = f(mid);
    if (at_mid.enclosure.midpoint() < x) {
      lo = mid;
      at_lo = std::move(at_mid);
    } else {
      hi = mid;
      at_hi = std::move(at_mid);
    }
  }
  if (x - at_lo.enclosure.midpoint() <= at_hi.enclosure.midpoint() - x) {
    return {lo, steps, std::move(at_lo)};
  }
  return {hi, steps, std::move(at_hi)};
}

inline double sin(double x, double tol, int max_iter = kDefaultIterationCap) {
  return sin_detailed(x, tol, max_iter).value;
}

/// Vector (u, v) from Y0 to Z, where Z is the intersection of the tangent at
/// Y0 with the ray OY.
struct TangentIntersection {
  double u = 0.0;
  double v = 0.0;

  [[nodiscard]] double norm() const noexcept { return std::hypot(u, v); }
};

inline TangentIntersection tangent_intersection(double y0, double y) {
  const CirclePoint p0 = point_from_ordinate(y0);
  const CirclePoint p = point_from_ordinate(y);
  const double dot = p.x() * p0.x() + p.y() * p0.y();
  if (!(dot > 0.0)) {
    // Perpendicular radii: the ray OY is parallel to the tangent at Y0.
    throw DomainError("tangent at y0 = " + detail::format_double(y0) + " never meets the ray to y = " +
                      detail::format_double(y));
  }
  const double cross = p.x() * p0.y() - p0.x() * p.y();
  return {p0.y() / dot * cross, -p0.x() / dot * cross};
}

/// Area of triangle Z O Y0 (base |Y0 Z| on the tangent, height 1). Bounds the
/// sector area between Y and Y0 from above.
inline double continuity_modulus(double y0, double y) {
  return 0.5 * tangent_intersection(y0, y).norm();
}

}  // namespace polytrig
