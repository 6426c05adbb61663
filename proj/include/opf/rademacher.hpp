#pragma once

#include <gmpxx.h>

#include "opf/interval.hpp"

namespace opf::rademacher {

using arith::Bits;
using arith::Interval;

/// Enclosure of mu(n) = pi sqrt(n).
struct MuValue {
  unsigned long n = 0;
  Interval enclosure;
};

MuValue mu_hat(unsigned long n, Bits precision);

/// e^{pi i r} with r exact and reduced to [0, 2).
struct RootOfUnity {
  mpq_class exponent;

  Interval real_part(Bits precision) const;
  Interval imag_part(Bits precision) const;
};

/// omega(h, k) = exp(pi i sum_{r=1}^{k-1} (r/k)(hr/k - floor(hr/k) - 1/2)).
/// Requires gcd(h, k) = 1 (h = 0 only with k = 1). h is reduced mod k first.
RootOfUnity omega(unsigned long h, unsigned long k);

/// Complex enclosure as a pair of real intervals.
struct ComplexInterval {
  Interval re;
  Interval im;
};

/// T(n) = (1/8n)(1 - 1/mu)e^{mu}, the k = 1 dominant part.
Interval main_term(unsigned long n, Bits precision);

/// (N^{5/2} / (n mu)) sinh(mu / N), the truncation error bound after the odd k <= N.
Interval engel_error_bound(unsigned long n, unsigned long terms, Bits precision);

/// 3^{5/2} e^{mu/3} / (2 n mu), the coarser exponential form of the N = 3 bound.
Interval engel_error_bound_exp3(unsigned long n, Bits precision);

/// d/dn ( sinh(pi sqrt(n)/k) / sqrt(n) ) in closed form.
Interval sinh_derivative(unsigned long n, unsigned long k, Bits precision);

/// Contribution of one odd level k to the series: (sqrt(k)/2pi) sum_h (omega(h,k)^2/omega(2h,k))
/// e^{-2 pi i n h/k} times the derivative term.
ComplexInterval k_term(unsigned long n, unsigned long k, Bits precision);

struct EstimateResult {
  unsigned long n = 0;
  unsigned long terms = 0;
  Interval enclosure;
  Interval main_sum;
  Interval error_radius;
  /// Imaginary part of the truncated sum; contains 0 for a consistent evaluation.
  Interval imag_part;
};

/// Truncated series over odd k <= terms plus the error bound. Rejects even or zero terms.
EstimateResult estimate(unsigned long n, unsigned long terms, Bits precision);

/// Largest integer inside the enclosure if it contains exactly one integer.
bool rounds_uniquely(const EstimateResult& result, mpz_class& value);

/// Upper bound on |p(n) - T(n)|: (1/8n)(1 + 1/mu)e^{-mu} + engel_error_bound(n, 3).
Interval residual_split_bound(unsigned long n, Bits precision);

}  // namespace opf::rademacher
