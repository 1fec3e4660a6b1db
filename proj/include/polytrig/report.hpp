#pragma once

#include <string_view>
#include <vector>

#include "polytrig/enclosure.hpp"

namespace polytrig {

enum class StopReason { tolerance_met, iteration_cap };

/// Which bracket the enclosure columns of a report refer to.
enum class Quantity { arc_length, sector_area };

[[nodiscard]] constexpr std::string_view to_string(StopReason r) noexcept {
  return r == StopReason::tolerance_met ? "tolerance_met" : "iteration_cap";
}

[[nodiscard]] constexpr std::string_view to_string(Quantity q) noexcept {
  return q == Quantity::arc_length ? "arc_length" : "sector_area";
}

/// One level of the chord-bisection scheme together with the polygon areas
/// built on it and the bracket in force after that level.
struct ReportRow {
  int m = 0;
  double segment_length = 0.0;
  double height = 0.0;
  double total_length = 0.0;
  double inner_area = 0.0;
  double outer_area = 0.0;
  double enclosure_lo = 0.0;
  double enclosure_hi = 0.0;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct ConvergenceReport {
  Quantity quantity = Quantity::arc_length;
  double a = 0.0;  // ordinate of the upper endpoint
  double b = 0.0;  // ordinate of the lower endpoint
  double tolerance = 0.0;
  StopReason stop_reason = StopReason::tolerance_met;
  std::vector<ReportRow> rows;

  friend bool operator==(const ConvergenceReport&, const ConvergenceReport&) = default;
};

}  // namespace polytrig
