#pragma once

// Partitions of an arc, their refinements, and the refinement bound
//
//   |L(P') - L(P)| <= l(0)/h(0)^2 * |P|^2 / (4 - |P|^2)
//
// which makes the limit of polygonal lengths independent of the partition
// sequence as long as the norm goes to zero.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iterator>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "polytrig/arclength.hpp"
#include "polytrig/sector_area.hpp"

namespace polytrig {

/// Ordinates closer than this are the same point when merging partitions.
inline constexpr double kUnionOrdinateTolerance = 1e-14;
/// Random partitions drop draws closer than this to an already kept ordinate.
inline constexpr double kRandomMinimumGap = 1e-12;
/// Explicit bisection partitions hold 2^m + 1 points; keep that in memory.
inline constexpr int kMaxExplicitBisectionLevel = 26;
inline constexpr int kMaxPartitionSegments = 1 << 26;

namespace detail {

// Neumaier's compensated sum; partitions can hold millions of chords.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace detail

/// Ordered point set A = P0 > P1 > ... > Pn = B on an arc, n >= 1.
class Partition {
 public:
  /// Validates strict decrease of ordinates; the first point is A.
  static Partition from_points(std::vector<CirclePoint> points) {
    if (points.size() < 2) {
      throw DegenerateArcError("a partition needs two distinct endpoints");
    }
    double norm = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i) {
      if (!(points[i - 1].y() > points[i].y())) {
        throw PreconditionError("partition ordinates must strictly decrease (index " +
                                std::to_string(i) + ")");
      }
      norm = std::max(norm, chord_length(points[i - 1], points[i]));
    }
    return Partition(std::move(points), norm);
  }

  [[nodiscard]] std::span<const CirclePoint> points() const noexcept { return points_; }
  [[nodiscard]] std::size_t segments() const noexcept { return points_.size() - 1; }
  [[nodiscard]] const CirclePoint& front() const noexcept { return points_.front(); }
  [[nodiscard]] const CirclePoint& back() const noexcept { return points_.back(); }
  /// Longest chord between adjacent points.
  [[nodiscard]] double norm() const noexcept { return norm_; }

 private:
  Partition(std::vector<CirclePoint> points, double norm) : points_(std::move(points)), norm_(norm) {}

  std::vector<CirclePoint> points_;
  double norm_;
};

inline double polygonal_length(const Partition& p) {
  detail::CompensatedSum sum;
  const auto pts = p.points();
  for (std::size_t i = 1; i < pts.size(); ++i) sum.add(chord_length(pts[i - 1], pts[i]));
  return sum.value();
}

/// Sorted union of two partitions of the same arc; refines both.
inline Partition refine_union(const Partition& p, const Partition& q) {
  if (std::abs(p.front().y() - q.front().y()) > kUnionOrdinateTolerance ||
      std::abs(p.back().y() - q.back().y()) > kUnionOrdinateTolerance) {
    throw PreconditionError("partitions cover different arcs");
  }
  std::vector<CirclePoint> merged;
  merged.reserve(p.points().size() + q.points().size());
  std::merge(p.points().begin(), p.points().end(), q.points().begin(), q.points().end(),
             std::back_inserter(merged),
             [](const CirclePoint& l, const CirclePoint& r) { return l.y() > r.y(); });
  std::vector<CirclePoint> out;
  out.reserve(merged.size());
  for (const CirclePoint& pt : merged) {
    if (out.empty() || out.back().y() - pt.y() > kUnionOrdinateTolerance) out.push_back(pt);
  }
  return Partition::from_points(std::move(out));
}

/// l(0)/h(0)^2 * |P|^2 / (4 - |P|^2) for the whole arc of `p`.
inline double refinement_gap_bound(const Partition& p) {
  const double l0 = chord_length(p.front(), p.back());
  const double h0 = height_from_chord(l0);
  const double n2 = p.norm() * p.norm();
  return l0 / (h0 * h0) * n2 / (4.0 - n2);
}

/// Segment-wise form of the same bound, sum of l_i (1/h_i^2 - 1)
/// = sum of l_i^3 / (4 - l_i^2). Never larger than refinement_gap_bound.
inline double refinement_gap_certificate(const Partition& p) {
  detail::CompensatedSum sum;
  const auto pts = p.points();
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double l = chord_length(pts[i - 1], pts[i]);
    sum.add(l * l * l / (4.0 - l * l));
  }
  return sum.value();
}

struct BisectionScheme {
  int m = 0;
};
struct OrdinateUniformScheme {
  int n = 1;
};
struct RandomScheme {
  int n = 1;
  std::uint64_t seed = 0;
};
using PartitionScheme = std::variant<BisectionScheme, OrdinateUniformScheme, RandomScheme>;

namespace detail {

inline void check_segments(int n) {
  if (n < 1) throw DomainError("segment count must be positive, got " + std::to_string(n));
  if (n > kMaxPartitionSegments) {
    throw CapacityError("segment count " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxPartitionSegments));
  }
}

// Uniform double in [0, 1) from the top 53 bits; independent of the
// standard library's distribution implementation.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Partition bisection_partition(const Chord& c, int m) {
  if (m < 0) throw DomainError("bisection level must be non-negative, got " + std::to_string(m));
  if (m > kMaxExplicitBisectionLevel) {
    throw CapacityError("explicit bisection level " + std::to_string(m) + " exceeds " +
                        std::to_string(kMaxExplicitBisectionLevel));
  }
  std::vector<CirclePoint> pts{c.hi, c.lo};
  for (int k = 0; k < m; ++k) pts = bisection_step(pts);
  return Partition::from_points(std::move(pts));
}

inline Partition uniform_partition(const Chord& c, int n) {
  check_segments(n);
  const double top = c.hi.y();
  const double span = top - c.lo.y();
  std::vector<CirclePoint> pts;
  pts.reserve(static_cast<std::size_t>(n) + 1);
  pts.push_back(c.hi);
  for (int k = 1; k < n; ++k) pts.push_back(point_from_ordinate(top - span * k / n));
  pts.push_back(c.lo);
  return Partition::from_points(std::move(pts));
}

inline Partition random_partition(const Chord& c, int n, std::uint64_t seed) {
  check_segments(n);
  const double top = c.hi.y();
  const double bottom = c.lo.y();
  std::mt19937_64 rng(seed);
  std::vector<double> ys;
  ys.reserve(static_cast<std::size_t>(n) - 1);
  for (int k = 1; k < n; ++k) ys.push_back(bottom + unit_uniform(rng) * (top - bottom));
  std::sort(ys.begin(), ys.end(), std::greater<>());
  std::vector<CirclePoint> pts;
  pts.reserve(static_cast<std::size_t>(n) + 1);
  pts.push_back(c.hi);
  for (double y : ys) {
    if (pts.back().y() - y >= kRandomMinimumGap && y - bottom >= kRandomMinimumGap) {
      pts.push_back(point_from_ordinate(y));
    }
  }
  pts.push_back(c.lo);
  return Partition::from_points(std::move(pts));
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace detail

/// Partition of arc ab by the given scheme. The first point is the endpoint
/// with the larger ordinate.
inline Partition make_partition(const CirclePoint& a, const CirclePoint& b,
                                const PartitionScheme& scheme) {
  const Chord c = detail::nondegenerate_chord(a, b, "partition");
  return std::visit(
      detail::overloaded{
          [&](const BisectionScheme& s) { return detail::bisection_partition(c, s.m); },
          [&](const OrdinateUniformScheme& s) { return detail::uniform_partition(c, s.n); },
          [&](const RandomScheme& s) { return detail::random_partition(c, s.n, s.seed); },
      },
      scheme);
}

enum class SchemeFamily { bisection, ordinate_uniform, random };

[[nodiscard]] constexpr std::string_view to_string(SchemeFamily f) noexcept {
  switch (f) {
    case SchemeFamily::bisection: return "bisection";
    case SchemeFamily::ordinate_uniform: return "ordinate_uniform";
    case SchemeFamily::random: return "random";
  }
  return "unknown";
}

/// Member `level` of a family: 2^level segments (bisection level `level`).
inline PartitionScheme scheme_at_level(SchemeFamily family, int level, std::uint64_t seed = 0) {
  if (level < 0 || level > 30) {
    throw DomainError("scheme level must lie in [0, 30], got " + std::to_string(level));
  }
  switch (family) {
    case SchemeFamily::bisection: return BisectionScheme{level};
    case SchemeFamily::ordinate_uniform: return OrdinateUniformScheme{1 << level};
    case SchemeFamily::random: return RandomScheme{1 << level, seed + static_cast<std::uint64_t>(level)};
  }
  throw DomainError("unknown scheme family");
}

struct LadderRow {
  int level = 0;
  std::size_t points = 0;
  double norm = 0.0;
  double length = 0.0;
  double certificate = 0.0;  // refinement_gap_certificate
  double bound = 0.0;        // refinement_gap_bound
};

struct SchemeLimit {
  SchemeFamily family = SchemeFamily::bisection;
  double value = 0.0;
  std::vector<LadderRow> ladder;
};

inline constexpr int kDefaultSchemeMaxLevel = 24;

/// Polygonal length along a family at levels 0, 1, 2, ... until two
/// successive lengths differ by at most tol and no refinement of the
/// current partition can add more than tol.
///
/// The second test uses the segment-wise refinement certificate; the
/// whole-arc bound weighs every chord by the worst one and needs roughly
/// 10^9 points for ordinate-uniform partitions of arcs touching y = 1.
inline SchemeLimit scheme_limit(const CirclePoint& a, const CirclePoint& b, SchemeFamily family,
                                double tol, std::uint64_t seed = 0,
                                int max_level = kDefaultSchemeMaxLevel) {
  detail::check_tolerance(tol);
  const Chord c = detail::nondegenerate_chord(a, b, "scheme limit");
  if (max_level < 1 || max_level > 30) {
    throw DomainError("scheme max level must lie in [1, 30], got " + std::to_string(max_level));
  }
  SchemeLimit out{family, 0.0, {}};
  std::vector<CirclePoint> bisected{c.hi, c.lo};
  for (int level = 0; level <= max_level; ++level) {
    Partition p = [&] {
      if (family == SchemeFamily::bisection) {
        if (level > 0) bisected = bisection_step(bisected);
        return Partition::from_points(bisected);
      }
      return make_partition(c.hi, c.lo, scheme_at_level(family, level, seed));
    }();
    const LadderRow row{level,
                        p.points().size(),
                        p.norm(),
                        polygonal_length(p),
                        refinement_gap_certificate(p),
                        refinement_gap_bound(p)};
    out.ladder.push_back(row);
    out.value = row.length;
    if (level > 0) {
      const double step = std::abs(row.length - out.ladder[out.ladder.size() - 2].length);
      if (step <= tol && row.certificate <= tol) return out;
    }
  }
  throw NonConvergenceError(std::string(to_string(family)) + " partitions did not settle to " +
                                detail::format_double(tol) + " by level " +
                                std::to_string(max_level),
                            {out.value, out.value + out.ladder.back().certificate});
}

struct AdditivityResult {
  double arc_whole = 0.0;
  double arc_parts = 0.0;  // |arc a m| + |arc m b|
  double sector_whole = 0.0;
  double sector_parts = 0.0;
};

/// Midpoint lengths and areas of arc ab and of its two pieces at m.
inline AdditivityResult additivity_check(const CirclePoint& a, const CirclePoint& m,
                                         const CirclePoint& b, double tol,
                                         int max_iter = kDefaultIterationCap) {
  const Chord c = make_chord(a, b);
  if (m.y() > c.hi.y() || m.y() < c.lo.y()) {
    throw PreconditionError("split point y = " + detail::format_double(m.y()) +
                            " lies outside the arc [" + detail::format_double(c.lo.y()) + ", " +
                            detail::format_double(c.hi.y()) + "]");
  }
  auto arc = [&](const CirclePoint& p, const CirclePoint& q) {
    return arc_length(p, q, tol, max_iter).enclosure.midpoint();
  };
  auto sector = [&](const CirclePoint& p, const CirclePoint& q) {
    return sector_area(p, q, tol, max_iter).enclosure.midpoint();
  };
  return {arc(c.hi, c.lo), arc(c.hi, m) + arc(m, c.lo), sector(c.hi, c.lo),
          sector(c.hi, m) + sector(m, c.lo)};
}

}  // namespace polytrig
