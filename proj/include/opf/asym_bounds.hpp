#pragma once

#include <gmpxx.h>

#include <array>

#include "opf/certify.hpp"
#include "opf/exact_core.hpp"
#include "opf/interval.hpp"
#include "opf/laurent.hpp"

namespace opf::asym {

using arith::Bits;
using arith::Certificate;
using arith::Interval;
using arith::PrecisionPolicy;
using exact::OverpartitionTable;

struct ThresholdParams {
  unsigned m = 1;
  /// Point {1} for m = 1, otherwise an enclosure of 2m log m - m log log m.
  Interval n0;
  /// x^m e^{-x} < 1 certified at x = upper endpoint of n0.
  arith::Comparison n0_check = arith::Comparison::Unknown;
  /// max{184, ceil((9 / 4 pi^2) n0^2)} from the upper endpoints; 0 until filled.
  unsigned long n1 = 0;
};

ThresholdParams n0_threshold(unsigned m, const PrecisionPolicy& policy = {});
ThresholdParams n1_threshold(unsigned m, const PrecisionPolicy& policy = {});

/// Certifies x^m e^{-x} < 1 (as m log x - x < 0) at an exact rational x > 0.
arith::Verdict power_exp_below_one(const mpq_class& x, unsigned m, const PrecisionPolicy& policy = {});

/// Exact dyadic value of the upper endpoint.
mpq_class upper_endpoint(const Interval& x);

/// |p(n)/T(n) - 1| < (3/2)^{m+1} mu^{-m}. Requires n >= n1_threshold(m).
Certificate y_bound_check(const OverpartitionTable& table, unsigned long n, unsigned m,
                          const PrecisionPolicy& policy = {});

/// Components of the T(n+1)/T(n) sandwich at (n, m); m' = floor(m/2).
struct TRatioTerms {
  unsigned m = 0;
  unsigned m_half = 0;
  Interval mu;
  Interval mu1;
  Interval eps1;
  Interval mu2;
  Interval eps2;
  Interval nu;
  Interval nu1;
  Interval nu2;
};

TRatioTerms t_ratio_terms(unsigned long n, unsigned m, Bits precision);

/// (1/2 choose k) style binomials for a rational top argument.
mpq_class binomial(const mpq_class& top, unsigned k);

struct RatioBounds {
  Interval lo;
  Interval hi;
};

/// Lower/upper bounds for T(n+1)/T(n). Throws PreconditionError unless mu * eps1 < 1/2.
RatioBounds t_ratio_bounds(unsigned long n, unsigned m, Bits precision);

/// Direct enclosure of T(n+1)/T(n).
Interval direct_t_ratio(unsigned long n, Bits precision);

/// T(n+1)/T(n) (1 - 4 2^m mu^{-m})  and  T(n+1)/T(n) (1 + 6 2^m mu^{-m}). Requires n >= n1(m).
RatioBounds p_ratio_window(const OverpartitionTable& table, unsigned long n, unsigned m, Bits precision);

/// Containment of p(n+1)/p(n) in p_ratio_window.
Certificate certify_p_ratio_window(const OverpartitionTable& table, unsigned long n, unsigned m,
                                   const PrecisionPolicy& policy = {});

/// The published order-4 expansion of p(n+1)/p(n) in powers of 1/mu(n), valid for n > 66.
struct RatioExpansion {
  std::array<arith::PiPolynomial, 5> a;
  long lower_slack = 160;
  long upper_slack = 873;
  unsigned long valid_from = 67;

  /// sum_k a_k mu^{-k}
  arith::MuLaurent series() const;
};

const RatioExpansion& ratio_expansion_m4();

/// sum a_k mu^-k - 160/mu^5 < p(n+1)/p(n) < sum a_k mu^-k + 873/mu^5, n >= 67.
Certificate explicit_ratio_window(const OverpartitionTable& table, unsigned long n,
                                  const PrecisionPolicy& policy = {});

}  // namespace opf::asym
