#include <doctest.h>
#include <omp.h>

#include <cmath>
#include <vector>

#include "opf/errors.hpp"
#include "opf/interval.hpp"

using namespace opf::arith;

namespace {

// The MPFR constant, nearest-rounded at a much higher precision.
Interval mpfr_pi_point(Bits prec) {
  mpfr_t x;
  mpfr_init2(x, prec);
  mpfr_const_pi(x, MPFR_RNDN);
  Interval r = Interval::from_bounds(x, x, prec);
  mpfr_clear(x);
  return r;
}

mpq_class as_q(mpfr_srcptr x) {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), x);
  return q;
}

}  // namespace

TEST_CASE("Machin pi encloses the library constant") {
  for (Bits p : {16, 53, 64, 128, 333, 1000, 4096}) {
    const Interval pi = enclose_pi(p);
    CHECK(pi.precision() == p);
    mpfr_t lo;
    mpfr_t hi;
    mpfr_init2(lo, p + 64);
    mpfr_init2(hi, p + 64);
    mpfr_const_pi(lo, MPFR_RNDD);
    mpfr_const_pi(hi, MPFR_RNDU);
    CHECK(mpfr_lessequal_p(pi.lo(), lo));
    CHECK(mpfr_greaterequal_p(pi.hi(), hi));
    mpfr_clears(lo, hi, static_cast<mpfr_ptr>(nullptr));
    mpfr_t w;
    mpfr_init2(w, p);
    mpfr_sub(w, pi.hi(), pi.lo(), MPFR_RNDU);
    CHECK((mpfr_zero_p(w) || mpfr_get_exp(w) <= 4 - p));
    mpfr_clear(w);
  }
  CHECK(enclose_pi(128).contains(as_q(mpfr_pi_point(2048).lo())));
}

TEST_CASE("exact constructors contain their values") {
  const mpq_class third(1, 3);
  const Interval x = Interval::exact(third, 64);
  CHECK(x.contains(third));
  CHECK_FALSE(x.contains(mpq_class(1, 3) + mpq_class(1, 1000000)));
  const Interval big = Interval::exact(mpz_class("123456789012345678901234567890"), 53);
  CHECK(big.contains(mpz_class("123456789012345678901234567890")));
  CHECK(Interval::exact(7, 16).width_upper() == 0.0);
}

TEST_CASE("arithmetic encloses exact rational results") {
  const mpq_class a(1, 3);
  const mpq_class b(-2, 7);
  const mpq_class c(5, 11);
  const Interval A = Interval::exact(a, 40);
  const Interval B = Interval::exact(b, 40);
  const Interval C = Interval::exact(c, 40);
  CHECK(((A + B) * C).contains(mpq_class((a + b) * c)));
  CHECK(((A - B) / C).contains(mpq_class((a - b) / c)));
  CHECK((A * 3L - 1L).contains(mpq_class(0)));
  CHECK((1L / A).contains(mpq_class(3)));
  CHECK((A + c).contains(mpq_class(a + c)));
  CHECK(square(B).contains(mpq_class(b * b)));
  CHECK(pow(B, 3).contains(mpq_class(b * b * b)));
  CHECK(pow(B, 3).certainly_negative());
  CHECK(pow(B, 0).contains(mpq_class(1)));
  CHECK((-A).contains(mpq_class(-a)));
}

TEST_CASE("domain errors") {
  const Interval straddle = hull(Interval::exact(-1, 64), Interval::exact(1, 64));
  CHECK(straddle.contains_zero());
  CHECK_THROWS_AS(Interval::exact(1, 64) / straddle, opf::DomainError);
  CHECK_THROWS_AS(sqrt(Interval::exact(-1, 64)), opf::DomainError);
  CHECK_THROWS_AS(log(straddle), opf::DomainError);
  const Interval sq = square(straddle);
  CHECK(mpfr_zero_p(sq.lo()));
  CHECK(abs(straddle).contains(mpq_class(0)));
}

TEST_CASE("elementary functions agree with a high-precision evaluation") {
  const mpq_class x(7, 5);
  const Interval lo = Interval::exact(x, 80);
  const Interval hi = Interval::exact(x, 1024);
  CHECK(exp(lo).contains(as_q(exp(hi).lo())));
  CHECK(log(lo).contains(as_q(log(hi).lo())));
  CHECK(sinh(lo).contains(as_q(sinh(hi).lo())));
  CHECK(cosh(lo).contains(as_q(cosh(hi).lo())));
  CHECK(sqrt(lo).contains(as_q(sqrt(hi).lo())));
  CHECK(sqrt(Interval::exact(mpq_class(9, 4), 64)).contains(mpq_class(3, 2)));
  CHECK(sqrt_of(49, 64).contains(mpq_class(7)));
}

TEST_CASE("trigonometric enclosures") {
  const Interval third_pi = enclose_pi(128) / 3L;
  CHECK(cos(third_pi).contains(mpq_class(1, 2)));
  CHECK(sin(enclose_pi(128)).contains(mpq_class(0)));
  CHECK(cos(enclose_pi(128)).contains(mpq_class(-1)));
  const Interval c = cos(enclose_pi(64));
  CHECK(mpfr_cmp_si(c.lo(), -1) >= 0);
  const Interval s = sinh(third_pi);
  CHECK(s.lower_double() < 1.2493670505239753);
  CHECK(s.upper_double() > 1.2493670505239752);
}

TEST_CASE("refinement tightens enclosures") {
  double previous = 1.0;
  for (Bits p : {32, 64, 128, 256, 512}) {
    const double w = exp(enclose_pi(p)).width_upper();
    CHECK(w < previous);
    previous = w;
  }
  const Interval wide = enclose_pi(64);
  CHECK(wide.contains(enclose_pi(256)));
}

TEST_CASE("ordering helpers") {
  const Interval a = Interval::exact(1, 64);
  const Interval b = Interval::exact(2, 64);
  CHECK(certainly_less(a, b));
  CHECK_FALSE(certainly_less(b, a));
  CHECK_FALSE(certainly_less(hull(a, b), b));
  const Interval bump = a.inflated(Interval::exact(mpq_class(1, 4), 64));
  CHECK(bump.contains(mpq_class(3, 4)));
  CHECK(bump.contains(mpq_class(5, 4)));
  CHECK_FALSE(bump.contains(mpq_class(3, 2)));
}

TEST_CASE("thread-parallel evaluation matches serial") {
  std::vector<double> serial(64);
  std::vector<double> parallel(64);
  for (int i = 0; i < 64; ++i) serial[i] = exp(enclose_pi(96 + i) * static_cast<long>(i)).lower_double();
#pragma omp parallel for
  for (int i = 0; i < 64; ++i) parallel[i] = exp(enclose_pi(96 + i) * static_cast<long>(i)).lower_double();
  CHECK(serial == parallel);
}
