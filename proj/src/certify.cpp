#include "opf/certify.hpp"

#include <cmath>
#include <algorithm>
#include <limits>

namespace opf::arith {

std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::Less: return "less";
    case Comparison::Greater: return "greater";
    case Comparison::Equal: return "equal";
    case Comparison::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Equality: return "equality";
    case Outcome::Fails: return "fails";
    case Outcome::Unknown: return "unknown";
  }
  return "unknown";
}

Interval Operand::enclose(Bits precision) const {
  if (is_exact()) return Interval::exact(exact(), precision);
  return std::get<Enclosure>(value_)(precision);
}

Comparison compare_intervals(const Interval& a, const Interval& b) {
  if (certainly_less(a, b)) return Comparison::Less;
  if (certainly_less(b, a)) return Comparison::Greater;
  return Comparison::Unknown;
}

Verdict compare_certified(const Operand& a, const Operand& b, const PrecisionPolicy& policy) {
  if (a.is_exact() && b.is_exact()) {
    const int c = cmp(a.exact(), b.exact());
    Verdict v;
    v.outcome = c < 0 ? Comparison::Less : (c > 0 ? Comparison::Greater : Comparison::Equal);
    v.precision_used = 0;
    mpq_class d = abs(a.exact() - b.exact());
    v.gap = Interval::exact(d, 64).lower_double();
    return v;
  }
  const Bits start = std::max(policy.start, kMinPrecision);
  for (Bits prec = start; prec <= policy.cap; prec *= 2) {
    Interval ea = a.enclose(prec);
    Interval eb = b.enclose(prec);
    const Comparison c = compare_intervals(ea, eb);
    if (c != Comparison::Unknown) {
      Interval diff = (c == Comparison::Less) ? eb - ea : ea - eb;
      return Verdict{c, prec, diff.lower_double()};
    }
  }
  return Verdict{Comparison::Unknown, policy.cap, std::numeric_limits<double>::quiet_NaN()};
}

Certificate certify_strict(const std::vector<StrictInequality>& claims, const PrecisionPolicy& policy) {
  Certificate cert;
  bool fails = false;
  bool equality = false;
  bool unknown = false;
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& claim : claims) {
    Verdict v = compare_certified(claim.lhs, claim.rhs, policy);
    cert.precision_used = std::max(cert.precision_used, v.precision_used);
    switch (v.outcome) {
      case Comparison::Less: margin = std::min(margin, v.gap); break;
      case Comparison::Greater: fails = true; break;
      case Comparison::Equal: equality = true; break;
      case Comparison::Unknown: unknown = true; break;
    }
    cert.parts.push_back(v);
  }
  if (fails) {
    cert.outcome = Outcome::Fails;
  } else if (equality) {
    cert.outcome = Outcome::Equality;
  } else if (unknown) {
    cert.outcome = Outcome::Unknown;
  } else {
    cert.outcome = Outcome::Holds;
  }
  cert.margin = std::isinf(margin) ? std::numeric_limits<double>::quiet_NaN() : margin;
  return cert;
}

}  // namespace opf::arith
