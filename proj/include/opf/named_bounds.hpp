#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "opf/interval.hpp"
#include "opf/laurent.hpp"

namespace opf::verify {

using arith::Bits;
using arith::Interval;
using arith::MuLaurent;

enum class BoundName {
  s, t, v, U, L,
  s1_plus, s2_plus, s30_plus, s3_plus,
  s1_minus, s2_minus, s3_minus,
  L_plus, U_plus, L_minus, U_minus,
};

std::string_view to_string(BoundName name);
std::optional<BoundName> parse_bound_name(std::string_view text);
const std::vector<BoundName>& all_bound_names();

/// A named bound as a product of Laurent polynomials in x = n^{-1/2}.
/// Single-factor for everything except L_plus, U_plus, L_minus, U_minus.
struct NamedBound {
  BoundName name;
  std::vector<MuLaurent> factors;

  Interval evaluate(unsigned long n, Bits precision) const;
  Interval evaluate(unsigned long n, const Interval& pi) const;
};

const NamedBound& named_bound(BoundName name);

Interval eval_named_bound(BoundName name, unsigned long n, Bits precision);

/// c * x^j in x = n^{-1/2}, with c rational.
MuLaurent x_power(int j, const mpq_class& c = 1);
/// c * pi^k * x^j.
MuLaurent pi_x_power(int k, int j, const mpq_class& c = 1);

}  // namespace opf::verify
