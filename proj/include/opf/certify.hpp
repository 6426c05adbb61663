#pragma once

#include <gmpxx.h>

#include <functional>
#include <string_view>
#include <variant>
#include <vector>

#include "opf/interval.hpp"

namespace opf::arith {

/// Start precision, doubled on every non-separating evaluation, up to the cap.
struct PrecisionPolicy {
  Bits start = 128;
  Bits cap = 4096;
};

enum class Comparison { Less, Greater, Equal, Unknown };

std::string_view to_string(Comparison c);

struct Verdict {
  Comparison outcome = Comparison::Unknown;
  /// Precision of the evaluation that decided (or the cap, for Unknown). 0 for exact decisions.
  Bits precision_used = 0;
  /// Certified lower bound for |a - b| when separated (0 for Equal, NaN for Unknown).
  double gap = 0.0;
};

/// Evaluates an enclosure of a fixed real number at a requested precision.
using Enclosure = std::function<Interval(Bits)>;

/// Either an exact rational or a lazily re-evaluable enclosure.
class Operand {
 public:
  Operand(mpq_class exact) : value_(std::move(exact)) {}  // NOLINT(google-explicit-constructor)
  Operand(Enclosure enclosure) : value_(std::move(enclosure)) {}  // NOLINT(google-explicit-constructor)

  bool is_exact() const { return std::holds_alternative<mpq_class>(value_); }
  const mpq_class& exact() const { return std::get<mpq_class>(value_); }
  Interval enclose(Bits precision) const;

 private:
  std::variant<mpq_class, Enclosure> value_;
};

/// Two exact operands are compared exactly. Otherwise both are re-evaluated at
/// doubling precision until the enclosures are disjoint; Unknown once the cap is
/// reached. Less/Greater are then certificates.
Verdict compare_certified(const Operand& a, const Operand& b, const PrecisionPolicy& policy = {});

/// Single-shot comparison of two enclosures.
Comparison compare_intervals(const Interval& a, const Interval& b);

/// Per-statement outcome. Equality only comes from exact comparisons.
enum class Outcome { Holds, Equality, Fails, Unknown };

std::string_view to_string(Outcome o);

/// The claim lhs < rhs.
struct StrictInequality {
  Operand lhs;
  Operand rhs;
};

struct Certificate {
  Outcome outcome = Outcome::Unknown;
  Bits precision_used = 0;
  /// Smallest certified gap over the parts that hold (NaN if none was decided).
  double margin = 0.0;
  std::vector<Verdict> parts;
};

/// Certifies a conjunction of strict inequalities. Fails wins over Equality,
/// which wins over Unknown.
Certificate certify_strict(const std::vector<StrictInequality>& claims, const PrecisionPolicy& policy = {});

}  // namespace opf::arith
