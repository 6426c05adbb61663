#include <doctest.h>

#include <cmath>

#include "opf/certify.hpp"

using namespace opf::arith;

namespace {

Enclosure pi_enclosure() {
  return [](Bits p) { return enclose_pi(p); };
}

// Truncation of pi to `bits` binary places, pi - 2^-bits < q < pi.
mpq_class pi_below(unsigned bits) {
  mpfr_t x;
  mpfr_init2(x, bits + 8);
  mpfr_const_pi(x, MPFR_RNDZ);
  mpfr_mul_2ui(x, x, bits, MPFR_RNDZ);
  mpfr_floor(x, x);
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), x, MPFR_RNDZ);
  mpfr_clear(x);
  mpq_class q(z, mpz_class(1) << bits);
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("exact comparisons need no precision") {
  const Verdict v = compare_certified(mpq_class(1, 3), mpq_class(1, 2));
  CHECK(v.outcome == Comparison::Less);
  CHECK(v.precision_used == 0);
  CHECK(v.gap == doctest::Approx(1.0 / 6.0));
  CHECK(compare_certified(mpq_class(2, 4), mpq_class(1, 2)).outcome == Comparison::Equal);
  CHECK(compare_certified(mpq_class(2), mpq_class(1)).outcome == Comparison::Greater);
}

TEST_CASE("enclosures are separated at the starting precision when easy") {
  const Verdict v = compare_certified(pi_enclosure(), mpq_class(355, 113));
  CHECK(v.outcome == Comparison::Less);
  CHECK(v.precision_used == 128);
  CHECK(v.gap > 2.6e-7);
  CHECK(v.gap < 2.7e-7);
}

TEST_CASE("precision escalates for close comparisons") {
  const Verdict v = compare_certified(pi_below(300), pi_enclosure());
  CHECK(v.outcome == Comparison::Less);
  CHECK(v.precision_used == 512);
  const Verdict far = compare_certified(pi_below(300), pi_enclosure(), PrecisionPolicy{128, 256});
  CHECK(far.outcome == Comparison::Unknown);
  CHECK(far.precision_used == 256);
  CHECK(std::isnan(far.gap));
}

TEST_CASE("a number never separates from itself") {
  const Verdict v = compare_certified(pi_enclosure(), pi_enclosure(), PrecisionPolicy{64, 512});
  CHECK(v.outcome == Comparison::Unknown);
  CHECK(compare_intervals(enclose_pi(64), enclose_pi(64)) == Comparison::Unknown);
  CHECK(compare_intervals(Interval::exact(1, 64), Interval::exact(2, 64)) == Comparison::Less);
}

TEST_CASE("certificate outcome precedence") {
  const StrictInequality holds{mpq_class(1), mpq_class(2)};
  const StrictInequality equal{mpq_class(1), mpq_class(1)};
  const StrictInequality fails{mpq_class(2), mpq_class(1)};
  const StrictInequality unknown{pi_enclosure(), pi_enclosure()};
  const PrecisionPolicy cheap{64, 128};
  CHECK(certify_strict({holds, holds}, cheap).outcome == Outcome::Holds);
  CHECK(certify_strict({holds, unknown}, cheap).outcome == Outcome::Unknown);
  CHECK(certify_strict({unknown, equal}, cheap).outcome == Outcome::Equality);
  CHECK(certify_strict({equal, fails, unknown}, cheap).outcome == Outcome::Fails);
  const Certificate c = certify_strict({holds, {pi_enclosure(), mpq_class(4)}}, cheap);
  CHECK(c.outcome == Outcome::Holds);
  CHECK(c.parts.size() == 2);
  CHECK(c.precision_used == 64);
  CHECK(c.margin == doctest::Approx(4.0 - M_PI).epsilon(1e-12));
  CHECK(to_string(Outcome::Holds) == "holds");
}
