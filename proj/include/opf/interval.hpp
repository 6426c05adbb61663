#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace opf::arith {

using Bits = mpfr_prec_t;

inline constexpr Bits kMinPrecision = 16;

/// Closed interval [lo, hi] of MPFR floats. Every operation rounds lo toward
/// -inf and hi toward +inf, so an interval built from enclosures of exact
/// inputs always encloses the exact result.
class Interval {
 public:
  explicit Interval(Bits precision = 128);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval exact(long value, Bits precision);
  static Interval exact(const mpz_class& value, Bits precision);
  static Interval exact(const mpq_class& value, Bits precision);
  /// [lo, hi], both rounded outward to the given precision.
  static Interval from_bounds(mpfr_srcptr lo, mpfr_srcptr hi, Bits precision);

  Bits precision() const { return mpfr_get_prec(lo_); }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

  double lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_double() const;
  /// Upper bound for hi - lo.
  double width_upper() const;
  /// Upper bound for (hi - lo) / min |x| over the interval; +inf if it contains 0.
  double relative_width_upper() const;

  bool contains(const mpq_class& value) const;
  bool contains(const mpz_class& value) const;
  bool contains(const Interval& inner) const;
  bool contains_zero() const;
  bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
  bool certainly_negative() const { return mpfr_sgn(hi_) < 0; }

  /// [lo - r, hi + r] with r the upper endpoint of |radius|.
  Interval inflated(const Interval& radius) const;
  /// Same endpoints carried at a different precision (outward rounded when narrowing).
  Interval at_precision(Bits precision) const;

  std::string to_string(int digits = 20) const;

  friend Interval operator-(const Interval& a);
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);

 private:
  mpfr_t lo_;
  mpfr_t hi_;

  friend class IntervalAccess;
};

Interval operator+(const Interval& a, long b);
Interval operator+(long a, const Interval& b);
Interval operator-(const Interval& a, long b);
Interval operator-(long a, const Interval& b);
Interval operator*(const Interval& a, long b);
Interval operator*(long a, const Interval& b);
Interval operator/(const Interval& a, long b);
Interval operator/(long a, const Interval& b);
Interval operator+(const Interval& a, const mpq_class& b);
Interval operator-(const Interval& a, const mpq_class& b);
Interval operator*(const Interval& a, const mpq_class& b);

Interval sqrt(const Interval& a);
Interval exp(const Interval& a);
Interval log(const Interval& a);
Interval sinh(const Interval& a);
Interval cosh(const Interval& a);
/// Lipschitz enclosures; intended for narrow arguments.
Interval cos(const Interval& a);
Interval sin(const Interval& a);
Interval abs(const Interval& a);
Interval square(const Interval& a);
Interval pow(const Interval& a, long k);
/// Convex hull of the two intervals.
Interval hull(const Interval& a, const Interval& b);

/// Interval containing pi, from Machin's formula 16 atan(1/5) - 4 atan(1/239)
/// evaluated in fixed point with a rigorous bound on truncation and tail.
/// Width <= 2^(4 - precision).
Interval enclose_pi(Bits precision);

/// sqrt(n) for a positive integer.
Interval sqrt_of(unsigned long n, Bits precision);

/// a.hi < b.lo
bool certainly_less(const Interval& a, const Interval& b);

}  // namespace opf::arith
