#pragma once

// Area of the circular sector S(A, B) squeezed between two origin fans built
// on the level-m bisection of the arc:
//
//   inner  = sum of triangles P(i-1) O P(i)        = 2^m l(m) h(m) / 2
//   outer  = sum of tangent triangles at midpoints = 2^m l(m) / (2 h(m))
//
// The tangent triangle over a chord of length l with height h has base l/h
// (similar triangles) and height 1, hence area l / (2h); the outer fan is
// never built vertex by vertex.

#include <algorithm>
#include <cmath>
#include <string>

#include "polytrig/arclength.hpp"

namespace polytrig {

struct SectorSandwich {
  int m = 0;
  double inner_area = 0.0;
  double outer_area = 0.0;
  double gap = 0.0;  // outer - inner, in the cancellation-free form L l^2 / (8h)
};

namespace detail {

inline SectorSandwich sandwich_from(const BisectionRecord& r) {
  const double inner = 0.5 * r.total_length * r.height;
  const double outer = 0.5 * r.total_length / r.height;
  // 1/h - h = (1 - h^2)/h = (l/2)^2 / h
  const double gap = r.total_length * r.segment_length * r.segment_length / (8.0 * r.height);
  return {r.m, inner, outer, gap};
}

inline BisectionRecord record_at(const CirclePoint& a, const CirclePoint& b, int m, const char* op) {
  const Chord c = nondegenerate_chord(a, b, op);
  check_level(m, "level");
  BisectionRecord r = first_record(c.length);
  while (r.m < m) r = next_record(r);
  return r;
}

}  // namespace detail

inline SectorSandwich sector_sandwich(const CirclePoint& a, const CirclePoint& b, int m) {
  return detail::sandwich_from(detail::record_at(a, b, m, "sector sandwich"));
}

inline double inner_polygon_area(const CirclePoint& a, const CirclePoint& b, int m) {
  return sector_sandwich(a, b, m).inner_area;
}

inline double outer_polygon_area(const CirclePoint& a, const CirclePoint& b, int m) {
  return sector_sandwich(a, b, m).outer_area;
}

/// Smallest level m at which outer - inner < epsilon.
inline int gap_iterations(const CirclePoint& a, const CirclePoint& b, double epsilon,
                          int max_iter = kDefaultIterationCap) {
  if (!(epsilon > 0.0)) {
    throw DomainError("epsilon must be positive, got " + detail::format_double(epsilon));
  }
  detail::check_level(max_iter, "iteration cap");
  const Chord c = make_chord(a, b);
  if (c.length == 0.0) return 0;
  BisectionRecord r = detail::first_record(c.length);
  SectorSandwich s{};
  for (int m = 0; m <= max_iter; ++m) {
    if (m > 0) r = detail::next_record(r);
    s = detail::sandwich_from(r);
    if (s.gap < epsilon) return m;
  }
  throw NonConvergenceError("sandwich gap still >= " + detail::format_double(epsilon) +
                                " after level " + std::to_string(max_iter),
                            {s.inner_area, s.outer_area});
}

/// The sufficient condition on the level-m chord that forces the gap below
/// epsilon:
///   1 / (1 - (l(m)/2)^2) < 1 + 2 epsilon h(0)^2 / l(0).
inline bool height_criterion_holds(const CirclePoint& a, const CirclePoint& b, double epsilon,
                                   int m) {
  const BisectionRecord r0 = detail::record_at(a, b, 0, "height criterion");
  const BisectionRecord rm = detail::record_at(a, b, m, "height criterion");
  const double half = 0.5 * rm.segment_length;
  const double lhs = 1.0 / ((1.0 - half) * (1.0 + half));
  const double rhs = 1.0 + 2.0 * epsilon * r0.height * r0.height / r0.segment_length;
  return lhs < rhs;
}

/// First level satisfying height_criterion_holds. Never smaller than
/// gap_iterations, since the criterion is only sufficient.
inline int height_criterion_level(const CirclePoint& a, const CirclePoint& b, double epsilon,
                                  int max_iter = kDefaultIterationCap) {
  if (!(epsilon > 0.0)) {
    throw DomainError("epsilon must be positive, got " + detail::format_double(epsilon));
  }
  detail::check_level(max_iter, "iteration cap");
  for (int m = 0; m <= max_iter; ++m) {
    if (height_criterion_holds(a, b, epsilon, m)) return m;
  }
  throw NonConvergenceError("height criterion not met by level " + std::to_string(max_iter), {});
}

/// Certified enclosure [inner, outer] of |S(a, b)| at the first level whose
/// gap is at most tol. An empty arc gives [0, 0].
inline CertifiedValue sector_area(const CirclePoint& a, const CirclePoint& b, double tol,
                                  int max_iter = kDefaultIterationCap) {
  return detail::run_bisection(a, b, tol, max_iter, Quantity::sector_area);
}

struct RatioResult {
  double ratio = 0.0;
  CertifiedValue arc;
  CertifiedValue sector;
};

/// Ratio of the arc-length midpoint to the sector-area midpoint; tends to 2.
///
/// The ratio error is about the relative bracket width, so both brackets are
/// tightened to tol * min(1, |ab|). Short arcs would otherwise stop at a
/// level where the absolute width meets tol but the relative width does not.
inline RatioResult verify_ratio_detailed(const CirclePoint& a, const CirclePoint& b, double tol,
                                         int max_iter = kDefaultIterationCap) {
  const Chord c = detail::nondegenerate_chord(a, b, "ratio check");
  detail::check_tolerance(tol);
  const double inner_tol = tol * std::min(1.0, c.length);
  RatioResult out{0.0, arc_length(a, b, inner_tol, max_iter), sector_area(a, b, inner_tol, max_iter)};
  out.ratio = out.arc.enclosure.midpoint() / out.sector.enclosure.midpoint();
  return out;
}

inline double verify_ratio(const CirclePoint& a, const CirclePoint& b, double tol,
                           int max_iter = kDefaultIterationCap) {
  return verify_ratio_detailed(a, b, tol, max_iter).ratio;
}

}  // namespace polytrig
