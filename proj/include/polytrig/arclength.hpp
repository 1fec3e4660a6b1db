#pragma once

// Arc length on the quarter circle by repeated chord bisection.
//
// Level m splits the arc AB into 2^m congruent chords of length l(m); the
// polygonal length L(m) = 2^m l(m) increases with m and is bounded above by
// l(0) / h(0)^2. The limit is the arc length. Every level also yields the
// circumscribed bound L(m) / h(m) (twice the area of the tangent polygon),
// so each level gives a certified bracket [L(m), L(m) / h(m)].

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polytrig/enclosure.hpp"
#include "polytrig/errors.hpp"
#include "polytrig/geom_core.hpp"
#include "polytrig/report.hpp"

namespace polytrig {

/// Largest bisection level: 2^m + 1 points must be countable in 64 bits.
inline constexpr int kMaxBisectionLevel = 62;
inline constexpr int kDefaultIterationCap = 40;

struct BisectionRecord {
  int m = 0;
  double segment_length = 0.0;  // l(m)
  double height = 0.0;          // h(m)
  double total_length = 0.0;   // L(m) = 2^m l(m)
};

struct CertifiedValue {
  Enclosure enclosure;
  ConvergenceReport report;
};

/// Point P of the arc between a and b with |aP| = |Pb|.
///
/// P is the chord midpoint pushed out to the circle. Symmetry about OP makes
/// the two distances equal without any root finding.
inline CirclePoint circle_midpoint(const CirclePoint& a, const CirclePoint& b) {
  if (a == b) {
    throw DegenerateArcError("midpoint of an empty arc at y = " + detail::format_double(a.y()));
  }
  const double sx = a.x() + b.x();
  const double sy = a.y() + b.y();
  const double y = sy / std::hypot(sx, sy);
  return point_from_ordinate(y > 1.0 ? 1.0 : y);
}

/// Inserts the equidistant circle point between every adjacent pair.
/// Input must be ordered by strictly decreasing ordinate.
inline std::vector<CirclePoint> bisection_step(std::span<const CirclePoint> points) {
  if (points.size() < 2) {
    throw PreconditionError("bisection step needs at least two points");
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1].y() > points[i].y())) {
      throw PreconditionError("bisection step needs strictly decreasing ordinates (index " +
                              std::to_string(i) + ")");
    }
  }
  std::vector<CirclePoint> out;
  out.reserve(2 * points.size() - 1);
  out.push_back(points.front());
  for (std::size_t i = 1; i < points.size(); ++i) {
    const CirclePoint mid = circle_midpoint(points[i - 1], points[i]);
    if (!(points[i - 1].y() > mid.y() && mid.y() > points[i].y())) {
      throw CapacityError("points " + std::to_string(i - 1) + " and " + std::to_string(i) +
                          " are too close to bisect in double precision");
    }
    out.push_back(mid);
    out.push_back(points[i]);
  }
  return out;
}

namespace detail {

inline void check_level(int m, const char* what) {
  if (m < 0) throw DomainError(std::string(what) + " must be non-negative, got " + std::to_string(m));
  if (m > kMaxBisectionLevel) {
    throw CapacityError(std::string(what) + " " + std::to_string(m) + " exceeds the maximum level " +
                        std::to_string(kMaxBisectionLevel));
  }
}

inline void check_tolerance(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw DomainError("tolerance must be positive and finite, got " + format_double(tol));
  }
}

inline BisectionRecord first_record(double chord) {
  return {0, chord, height_from_chord(chord), chord};
}

// One bisection of a chord of length l with height h: the half-chord is the
// leg of a right triangle with hypotenuse |AP| and the other leg 1 - h, so
//   |AP|^2 = 2(1 - h) = l^2 / (2(1 + h)).
// The right-hand form avoids the cancellation in 1 - h.
inline BisectionRecord next_record(const BisectionRecord& r) {
  const double l = r.segment_length / std::sqrt(2.0 * (1.0 + r.height));
  const int m = r.m + 1;
  return {m, l, height_from_chord(l), std::ldexp(l, m)};
}

inline Chord nondegenerate_chord(const CirclePoint& a, const CirclePoint& b, const char* op) {
  Chord c = make_chord(a, b);
  if (c.length == 0.0) {
    throw DegenerateArcError(std::string(op) + " needs two distinct endpoints, both at y = " +
                             format_double(a.y()));
  }
  return c;
}

// Runs the bisection levels until the requested bracket is narrower than
// tol. Shared by arc length and sector area; only the enclosure columns of
// the rows differ.
inline CertifiedValue run_bisection(const CirclePoint& a, const CirclePoint& b, double tol,
                                    int max_iter, Quantity quantity) {
  check_tolerance(tol);
  check_level(max_iter, "iteration cap");
  const Chord c = make_chord(a, b);

  CertifiedValue out;
  out.report.quantity = quantity;
  out.report.a = c.hi.y();
  out.report.b = c.lo.y();
  out.report.tolerance = tol;
  if (c.length == 0.0) {
    out.report.stop_reason = StopReason::tolerance_met;
    return out;
  }

  BisectionRecord rec = first_record(c.length);
  Enclosure current;
  for (int m = 0; m <= max_iter; ++m) {
    if (m > 0) rec = next_record(rec);
    const double inner = 0.5 * rec.total_length * rec.height;
    const double outer = 0.5 * rec.total_length / rec.height;
    const Enclosure raw = quantity == Quantity::arc_length
                              ? pad_outward(rec.total_length, rec.total_length / rec.height)
                              : pad_outward(inner, outer);
    current = m == 0 ? raw : current.intersect(raw);
    out.report.rows.push_back({m, rec.segment_length, rec.height, rec.total_length, inner, outer,
                               current.lo, current.hi});
    if (current.width() <= tol) {
      out.enclosure = current;
      out.report.stop_reason = StopReason::tolerance_met;
      return out;
    }
  }
  out.enclosure = current;
  out.report.stop_reason = StopReason::iteration_cap;
  throw NonConvergenceError(std::string(to_string(quantity)) + " bracket still wider than " +
                                format_double(tol) + " after level " + std::to_string(max_iter),
                            current, std::move(out.report));
}

}  // namespace detail

/// Records for levels 0..m_max of the bisection of arc ab.
inline std::vector<BisectionRecord> length_sequence(const CirclePoint& a, const CirclePoint& b,
                                                    int m_max) {
  const Chord c = detail::nondegenerate_chord(a, b, "length sequence");
  detail::check_level(m_max, "level");
  std::vector<BisectionRecord> out;
  out.reserve(static_cast<std::size_t>(m_max) + 1);
  out.push_back(detail::first_record(c.length));
  for (int m = 1; m <= m_max; ++m) out.push_back(detail::next_record(out.back()));
  return out;
}

/// l(0) / h(0)^2, an upper bound for every polygonal length inscribed in ab.
inline double upper_bound(const CirclePoint& a, const CirclePoint& b) {
  const Chord c = detail::nondegenerate_chord(a, b, "upper bound");
  const double h = height_from_chord(c.length);
  return c.length / (h * h);
}

/// Certified enclosure of |arc ab|: [L(m), L(m)/h(m)] at the first level
/// whose bracket is at most `tol` wide. An empty arc gives [0, 0].
inline CertifiedValue arc_length(const CirclePoint& a, const CirclePoint& b, double tol,
                                 int max_iter = kDefaultIterationCap) {
  return detail::run_bisection(a, b, tol, max_iter, Quantity::arc_length);
}

}  // namespace polytrig
