#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "polytrig/enclosure.hpp"
#include "polytrig/report.hpp"

namespace polytrig {

/// Argument outside the domain of an operation (ordinate outside [0,1],
/// non-positive tolerance, negative level, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operation needs two distinct points and got one.
class DegenerateArcError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Input violates an ordering or shape precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested level or size exceeds what the index types or memory allow.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Iteration cap reached before the tolerance was met. Carries the last
/// bracket and the report up to that point.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, Enclosure last, ConvergenceReport report = {})
      : std::runtime_error(what), last_(last), report_(std::move(report)) {}

  [[nodiscard]] const Enclosure& last_enclosure() const noexcept { return last_; }
  [[nodiscard]] const ConvergenceReport& report() const noexcept { return report_; }

 private:
  Enclosure last_;
  ConvergenceReport report_;
};

}  // namespace polytrig
