#pragma once

// JSON and CSV forms of convergence reports. Requires nlohmann/json.
//
// CSV columns, in this order:
//   m, segment_length, height, total_length, inner_area, outer_area,
//   enclosure_lo, enclosure_hi

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "polytrig/detail/format.hpp"
#include "polytrig/enclosure.hpp"
#include "polytrig/errors.hpp"
#include "polytrig/report.hpp"

namespace polytrig {

using ordered_json = nlohmann::ordered_json;

inline constexpr std::string_view kCsvHeader =
    "m,segment_length,height,total_length,inner_area,outer_area,enclosure_lo,enclosure_hi";

inline StopReason stop_reason_from_string(std::string_view s) {
  if (s == "tolerance_met") return StopReason::tolerance_met;
  if (s == "iteration_cap") return StopReason::iteration_cap;
  throw DomainError("unknown stop reason '" + std::string(s) + "'");
}

inline Quantity quantity_from_string(std::string_view s) {
  if (s == "arc_length") return Quantity::arc_length;
  if (s == "sector_area") return Quantity::sector_area;
  throw DomainError("unknown quantity '" + std::string(s) + "'");
}

inline void to_json(ordered_json& j, const Enclosure& e) { j = ordered_json{{"lo", e.lo}, {"hi", e.hi}}; }

inline void from_json(const ordered_json& j, Enclosure& e) {
  j.at("lo").get_to(e.lo);
  j.at("hi").get_to(e.hi);
}

inline void to_json(ordered_json& j, const ReportRow& r) {
  j = ordered_json{{"m", r.m},
                   {"segment_length", r.segment_length},
                   {"height", r.height},
                   {"total_length", r.total_length},
                   {"inner_area", r.inner_area},
                   {"outer_area", r.outer_area},
                   {"enclosure_lo", r.enclosure_lo},
                   {"enclosure_hi", r.enclosure_hi}};
}

inline void from_json(const ordered_json& j, ReportRow& r) {
  j.at("m").get_to(r.m);
  j.at("segment_length").get_to(r.segment_length);
  j.at("height").get_to(r.height);
  j.at("total_length").get_to(r.total_length);
  j.at("inner_area").get_to(r.inner_area);
  j.at("outer_area").get_to(r.outer_area);
  j.at("enclosure_lo").get_to(r.enclosure_lo);
  j.at("enclosure_hi").get_to(r.enclosure_hi);
}

inline void to_json(ordered_json& j, const ConvergenceReport& r) {
  j = ordered_json{{"quantity", to_string(r.quantity)},
                   {"a", r.a},
                   {"b", r.b},
                   {"tolerance", r.tolerance},
                   {"stop_reason", to_string(r.stop_reason)},
                   {"rows", r.rows}};
}

inline void from_json(const ordered_json& j, ConvergenceReport& r) {
  r.quantity = quantity_from_string(j.at("quantity").get<std::string>());
  j.at("a").get_to(r.a);
  j.at("b").get_to(r.b);
  j.at("tolerance").get_to(r.tolerance);
  r.stop_reason = stop_reason_from_string(j.at("stop_reason").get<std::string>());
  r.rows = j.at("rows").get<std::vector<ReportRow>>();
}

/// Header line plus one line per row, shortest round-trip number format.
inline void write_csv(std::ostream& os, const ConvergenceReport& r) {
  using detail::format_double;
  os << kCsvHeader << '\n';
  for (const ReportRow& row : r.rows) {
    os << row.m << ',' << format_double(row.segment_length) << ',' << format_double(row.height)
       << ',' << format_double(row.total_length) << ',' << format_double(row.inner_area) << ','
       << format_double(row.outer_area) << ',' << format_double(row.enclosure_lo) << ','
       << format_double(row.enclosure_hi) << '\n';
  }
}

}  // namespace polytrig
