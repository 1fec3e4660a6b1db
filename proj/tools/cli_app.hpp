#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and writes results to `out`, diagnostics and usage to `err`.
//
// Exit codes: 0 success, 1 domain error, 2 non-convergence, 64 usage.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polytrig/polytrig.hpp"
#include "polytrig/report_io.hpp"

namespace polytrig::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitNonConvergence = 2;
inline constexpr int kExitUsage = 64;

struct CommonOptions {
  double tol = 1e-10;
  std::string format = "json";
  int max_iter = kDefaultIterationCap;
  std::uint64_t seed = 0;
};

namespace detail {

// Summary fields shared by the JSON object and the CSV comment lines.
class Output {
 public:
  explicit Output(std::string command) { summary_["command"] = std::move(command); }

  template <class T>
  void set(const std::string& key, const T& value) {
    summary_[key] = value;
  }
  void add_report(const ConvergenceReport& r, const std::string& key = "report") {
    reports_.emplace_back(key, r);
  }

  void write(std::ostream& os, const std::string& format) const {
    if (format == "csv") {
      for (const auto& [k, v] : summary_.items()) os << "# " << k << '=' << scalar(v) << '\n';
      for (const auto& [k, r] : reports_) {
        if (reports_.size() > 1) os << "# " << k << '\n';
        write_csv(os, r);
      }
      return;
    }
    ordered_json j = summary_;
    for (const auto& [k, r] : reports_) j[k] = r;
    os << j.dump(2) << '\n';
  }

 private:
  static std::string scalar(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  }

  ordered_json summary_ = ordered_json::object();
  std::vector<std::pair<std::string, ConvergenceReport>> reports_;
};

inline void add_common(CLI::App* sub, CommonOptions& opts) {
  sub->add_option("--tol", opts.tol, "Bracket width / tolerance")->capture_default_str();
  sub->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sub->add_option("--max-iter", opts.max_iter, "Bisection level cap")->capture_default_str();
  sub->add_option("--seed", opts.seed, "Seed for random partitions")->capture_default_str();
}

inline void put_enclosure(Output& o, const std::string& key, const Enclosure& e) {
  o.set(key, ordered_json(e));
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trigonometry from inscribed and circumscribed polygons on the unit quarter circle",
               "polytrig"};
  app.require_subcommand(1);

  CommonOptions opts;
  double a = 1.0;
  double b = 0.0;
  double mid = 0.5;
  double arg = 0.0;
  int max_level = kDefaultSchemeMaxLevel;

  auto add_arc = [&](CLI::App* sub) {
    sub->add_option("--a", a, "Ordinate of one arc endpoint")->capture_default_str();
    sub->add_option("--b", b, "Ordinate of the other arc endpoint")->capture_default_str();
  };

  auto* pi_cmd = app.add_subcommand("pi", "Enclosure of pi");
  auto* arc_cmd = app.add_subcommand("arc", "Arc length between two ordinates");
  auto* arcsin_cmd = app.add_subcommand("arcsin", "arcsin(y) as an arc length");
  auto* sin_cmd = app.add_subcommand("sin", "sin(x) by inverting arcsin");
  auto* sector_cmd = app.add_subcommand("sector", "Sector area between two ordinates");
  auto* ratio_cmd = app.add_subcommand("ratio", "Arc length / sector area");
  auto* compare_cmd =
      app.add_subcommand("partition-compare", "Limits of three partition families");
  auto* add_cmd = app.add_subcommand("additivity", "Arc and sector additivity at a split point");

  for (auto* sub : {pi_cmd, arc_cmd, arcsin_cmd, sin_cmd, sector_cmd, ratio_cmd, compare_cmd, add_cmd}) {
    detail::add_common(sub, opts);
  }
  for (auto* sub : {arc_cmd, sector_cmd, ratio_cmd, compare_cmd, add_cmd}) add_arc(sub);
  arcsin_cmd->add_option("y", arg, "Ordinate in [0, 1]")->required();
  sin_cmd->add_option("x", arg, "Argument in [0, pi/2]")->required();
  add_cmd->add_option("--m", mid, "Ordinate of the split point")->capture_default_str();
  compare_cmd->add_option("--max-level", max_level, "Largest partition level (2^level segments)")
      ->capture_default_str();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (pi_cmd->parsed()) {
      const CertifiedValue r = pi_certified(opts.tol, opts.max_iter);
      detail::Output o("pi");
      o.set("tolerance", opts.tol);
      o.set("value", r.enclosure.midpoint());
      detail::put_enclosure(o, "enclosure", r.enclosure);
      o.add_report(r.report);
      o.write(out, opts.format);
    } else if (arc_cmd->parsed() || sector_cmd->parsed()) {
      const bool is_arc = arc_cmd->parsed();
      const CirclePoint pa = point_from_ordinate(a);
      const CirclePoint pb = point_from_ordinate(b);
      const CertifiedValue r =
          is_arc ? arc_length(pa, pb, opts.tol, opts.max_iter) : sector_area(pa, pb, opts.tol, opts.max_iter);
      detail::Output o(is_arc ? "arc" : "sector");
      o.set("a", a);
      o.set("b", b);
      o.set("tolerance", opts.tol);
      o.set("value", r.enclosure.midpoint());
      detail::put_enclosure(o, "enclosure", r.enclosure);
      o.add_report(r.report);
      o.write(out, opts.format);
    } else if (arcsin_cmd->parsed()) {
      const CertifiedValue r = arcsin(arg, opts.tol, opts.max_iter);
      detail::Output o("arcsin");
      o.set("y", arg);
      o.set("tolerance", opts.tol);
      o.set("value", r.enclosure.midpoint());
      detail::put_enclosure(o, "enclosure", r.enclosure);
      o.add_report(r.report);
      o.write(out, opts.format);
    } else if (sin_cmd->parsed()) {
      const SineResult r = sin_detailed(arg, opts.tol, opts.max_iter);
      detail::Output o("sin");
      o.set("x", arg);
      o.set("tolerance", opts.tol);
      o.set("value", r.value);
      o.set("bisection_steps", r.bisection_steps);
      detail::put_enclosure(o, "arcsin_of_value", r.arcsin_at_value.enclosure);
      o.add_report(r.arcsin_at_value.report);
      o.write(out, opts.format);
    } else if (ratio_cmd->parsed()) {
      const RatioResult r =
          verify_ratio_detailed(point_from_ordinate(a), point_from_ordinate(b), opts.tol, opts.max_iter);
      detail::Output o("ratio");
      o.set("a", a);
      o.set("b", b);
      o.set("tolerance", opts.tol);
      o.set("value", r.ratio);
      detail::put_enclosure(o, "arc_enclosure", r.arc.enclosure);
      detail::put_enclosure(o, "sector_enclosure", r.sector.enclosure);
      o.add_report(r.arc.report, "arc_report");
      o.add_report(r.sector.report, "sector_report");
      o.write(out, opts.format);
    } else if (compare_cmd->parsed()) {
      const CirclePoint pa = point_from_ordinate(a);
      const CirclePoint pb = point_from_ordinate(b);
      const CertifiedValue arc = arc_length(pa, pb, opts.tol, opts.max_iter);
      detail::Output o("partition-compare");
      o.set("a", a);
      o.set("b", b);
      o.set("tolerance", opts.tol);
      o.set("seed", opts.seed);
      o.set("value", arc.enclosure.midpoint());
      detail::put_enclosure(o, "enclosure", arc.enclosure);
      double smallest = 0.0;
      double largest = 0.0;
      bool first = true;
      for (SchemeFamily f : {SchemeFamily::bisection, SchemeFamily::ordinate_uniform, SchemeFamily::random}) {
        const SchemeLimit s = scheme_limit(pa, pb, f, opts.tol, opts.seed, max_level);
        const LadderRow& last = s.ladder.back();
        const std::string key(to_string(f));
        o.set(key + "_limit", s.value);
        o.set(key + "_level", last.level);
        o.set(key + "_points", last.points);
        o.set(key + "_norm", last.norm);
        o.set(key + "_certificate", last.certificate);
        smallest = first ? s.value : std::min(smallest, s.value);
        largest = first ? s.value : std::max(largest, s.value);
        first = false;
      }
      o.set("max_pairwise_difference", largest - smallest);
      o.add_report(arc.report);
      o.write(out, opts.format);
    } else if (add_cmd->parsed()) {
      const AdditivityResult r = additivity_check(point_from_ordinate(a), point_from_ordinate(mid),
                                                  point_from_ordinate(b), opts.tol, opts.max_iter);
      detail::Output o("additivity");
      o.set("a", a);
      o.set("m", mid);
      o.set("b", b);
      o.set("tolerance", opts.tol);
      o.set("arc_whole", r.arc_whole);
      o.set("arc_parts", r.arc_parts);
      o.set("arc_difference", r.arc_whole - r.arc_parts);
      o.set("sector_whole", r.sector_whole);
      o.set("sector_parts", r.sector_parts);
      o.set("sector_difference", r.sector_whole - r.sector_parts);
      o.write(out, opts.format);
    }
  } catch (const NonConvergenceError& e) {
    err << "non-convergence: " << e.what() << " (last enclosure [" << polytrig::detail::format_double(e.last_enclosure().lo)
        << ", " << polytrig::detail::format_double(e.last_enclosure().hi) << "])\n";
    return kExitNonConvergence;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::length_error& e) {
    err << "capacity: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace polytrig::cli
