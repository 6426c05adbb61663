#include "opf/rademacher.hpp"

#include <numeric>
#include <string>

#include "opf/errors.hpp"

namespace opf::rademacher {

using arith::enclose_pi;
using arith::sqrt_of;

MuValue mu_hat(unsigned long n, Bits precision) {
  if (n == 0) throw PreconditionError("mu_hat needs n >= 1");
  return MuValue{n, enclose_pi(precision) * sqrt_of(n, precision)};
}

namespace {

mpq_class reduce_mod_two(mpq_class r) {
  mpz_class q;
  // floor(r / 2)
  mpz_class num = r.get_num();
  mpz_class den = 2 * r.get_den();
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  r -= 2 * q;
  r.canonicalize();
  return r;
}

}  // namespace

Interval RootOfUnity::real_part(Bits precision) const {
  return arith::cos(enclose_pi(precision) * exponent);
}

Interval RootOfUnity::imag_part(Bits precision) const {
  return arith::sin(enclose_pi(precision) * exponent);
}

RootOfUnity omega(unsigned long h, unsigned long k) {
  if (k == 0) throw PreconditionError("omega needs k >= 1");
  h %= k;
  if (std::gcd(h, k) != 1) {
    throw PreconditionError("omega needs gcd(h, k) = 1, got h=" + std::to_string(h) + " k=" + std::to_string(k));
  }
  mpq_class sum = 0;
  for (unsigned long r = 1; r < k; ++r) {
    const unsigned long hr = h * r;
    mpq_class frac(static_cast<long>(hr % k), static_cast<long>(k));
    frac.canonicalize();
    mpq_class rk(static_cast<long>(r), static_cast<long>(k));
    rk.canonicalize();
    sum += rk * (frac - mpq_class(1, 2));
  }
  sum.canonicalize();
  return RootOfUnity{reduce_mod_two(sum)};
}

Interval main_term(unsigned long n, Bits precision) {
  const Interval mu = mu_hat(n, precision).enclosure;
  return (1 - 1 / mu) * arith::exp(mu) / static_cast<long>(8 * n);
}

Interval engel_error_bound(unsigned long n, unsigned long terms, Bits precision) {
  if (terms == 0 || terms % 2 == 0) throw PreconditionError("truncation order must be odd and positive");
  const Interval mu = mu_hat(n, precision).enclosure;
  Interval big_n = Interval::exact(static_cast<long>(terms), precision);
  Interval scale = arith::pow(big_n, 2) * arith::sqrt(big_n);
  return scale / (mu * static_cast<long>(n)) * arith::sinh(mu / big_n);
}

Interval engel_error_bound_exp3(unsigned long n, Bits precision) {
  const Interval mu = mu_hat(n, precision).enclosure;
  Interval scale = 9 * sqrt_of(3, precision);
  return scale * arith::exp(mu / 3L) / (mu * static_cast<long>(2 * n));
}

Interval sinh_derivative(unsigned long n, unsigned long k, Bits precision) {
  const Interval pi = enclose_pi(precision);
  const Interval root = sqrt_of(n, precision);
  const Interval arg = pi * root / static_cast<long>(k);
  const Interval first = pi * arith::cosh(arg) / static_cast<long>(2 * k * n);
  const Interval second = arith::sinh(arg) / (root * static_cast<long>(2 * n));
  return first - second;
}

ComplexInterval k_term(unsigned long n, unsigned long k, Bits precision) {
  if (k == 0 || k % 2 == 0) throw PreconditionError("series levels are odd k");
  const Interval pi = enclose_pi(precision);
  ComplexInterval phase{Interval::exact(0, precision), Interval::exact(0, precision)};
  for (unsigned long h = 0; h < k; ++h) {
    if (std::gcd(h, k) != 1) continue;
    // omega(h,k)^2 / omega(2h,k) * e^{-2 pi i n h / k}  ==  e^{pi i r}.
    mpq_class r = 2 * omega(h, k).exponent - omega((2 * h) % k, k).exponent;
    mpq_class shift(static_cast<long>(2 * ((n % k) * h % k)), static_cast<long>(k));
    shift.canonicalize();
    r -= shift;
    r.canonicalize();
    Interval angle = pi * r;
    phase.re = phase.re + arith::cos(angle);
    phase.im = phase.im + arith::sin(angle);
  }
  const Interval weight = sqrt_of(k, precision) * sinh_derivative(n, k, precision) / (2 * pi);
  return ComplexInterval{phase.re * weight, phase.im * weight};
}

EstimateResult estimate(unsigned long n, unsigned long terms, Bits precision) {
  if (n == 0) throw PreconditionError("estimate needs n >= 1");
  if (terms == 0 || terms % 2 == 0) throw PreconditionError("truncation order must be odd and positive");
  Interval re = Interval::exact(0, precision);
  Interval im = Interval::exact(0, precision);
  for (unsigned long k = 1; k <= terms; k += 2) {
    ComplexInterval t = k_term(n, k, precision);
    re = re + t.re;
    im = im + t.im;
  }
  Interval radius = engel_error_bound(n, terms, precision);
  EstimateResult out{n, terms, re.inflated(radius), re, radius, im};
  if (!im.contains_zero()) throw DomainError("imaginary part of the truncated series excludes 0");
  return out;
}

bool rounds_uniquely(const EstimateResult& result, mpz_class& value) {
  mpz_class lo;
  mpz_class hi;
  mpfr_get_z(lo.get_mpz_t(), result.enclosure.lo(), MPFR_RNDU);
  mpfr_get_z(hi.get_mpz_t(), result.enclosure.hi(), MPFR_RNDD);
  if (lo != hi) return false;
  value = lo;
  return true;
}

Interval residual_split_bound(unsigned long n, Bits precision) {
  const Interval mu = mu_hat(n, precision).enclosure;
  Interval first = (1 + 1 / mu) * arith::exp(-mu) / static_cast<long>(8 * n);
  return first + engel_error_bound(n, 3, precision);
}

}  // namespace opf::rademacher
