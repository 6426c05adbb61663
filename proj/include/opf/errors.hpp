#pragma once

#include <stdexcept>
#include <string>

namespace opf {

/// Argument outside the mathematical domain of an operation
/// (division by an interval containing zero, square root of a negative, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A documented precondition does not hold for the supplied arguments.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A quantity with a vanishing denominator was requested (1 - u_n = 0 and similar).
class DegenerateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Cache file missing, malformed or inconsistent with the recurrence.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace opf
