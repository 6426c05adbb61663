#include <doctest.h>

#include "opf/errors.hpp"
#include "opf/laurent.hpp"

using namespace opf::arith;

TEST_CASE("pi polynomial algebra") {
  const PiPolynomial p = PiPolynomial::pi_power(1) + PiPolynomial(1);
  const PiPolynomial q = PiPolynomial::pi_power(1) - PiPolynomial(1);
  CHECK(p * q == PiPolynomial({{2, 1}, {0, -1}}));
  CHECK(PiPolynomial::pi_power(3, 2) * PiPolynomial::pi_power(-3) == PiPolynomial(2));
  CHECK((p - p).is_zero());
  CHECK((p - p).terms().empty());
  CHECK(-p == PiPolynomial({{1, -1}, {0, -1}}));
  CHECK(p.coefficient(1) == 1);
  CHECK(p.coefficient(7) == 0);
}

TEST_CASE("pi polynomial evaluation") {
  const Interval pi = enclose_pi(128);
  // pi^2/32 - pi^-2 = 0.2071039538...
  const PiPolynomial c({{2, mpq_class(1, 32)}, {-2, -1}});
  const Interval v = c.evaluate(pi);
  CHECK(v.lower_double() < 0.20710396);
  CHECK(v.upper_double() > 0.20710395);
  CHECK(PiPolynomial(mpq_class(3, 7)).evaluate(pi).contains(mpq_class(3, 7)));
}

TEST_CASE("laurent series in n^{-1/2}") {
  const MuLaurent x2 = MuLaurent::monomial(2, PiPolynomial(1));
  CHECK(x2.evaluate(4, 64).contains(mpq_class(1, 4)));
  const MuLaurent x3 = MuLaurent::monomial(3, PiPolynomial(1));
  CHECK(x3.evaluate(9, 64).contains(mpq_class(1, 27)));
  const MuLaurent sum = MuLaurent::constant(PiPolynomial(1)) + x2 * x2;
  CHECK(sum.evaluate(2, 64).contains(mpq_class(5, 4)));
  CHECK(sum.coefficient(4) == PiPolynomial(1));
  CHECK((sum - sum).terms().empty());
  const MuLaurent inv = MuLaurent::monomial(-2, PiPolynomial(1));
  CHECK(inv.evaluate(10, 64).contains(mpq_class(10)));
}

TEST_CASE("laurent series in 1/mu") {
  const auto var = LaurentVariable::inverse_mu;
  const MuLaurent y = MuLaurent::monomial(1, PiPolynomial(1), var);
  const MuLaurent pi_y = MuLaurent::monomial(1, PiPolynomial::pi_power(1), var);
  // pi / mu(n) = n^{-1/2}
  CHECK(pi_y.evaluate(25, 128).contains(mpq_class(1, 5)));
  const Interval one_over_pi = y.evaluate(1, 128);
  CHECK(one_over_pi.lower_double() < 0.31830988618379070);
  CHECK(one_over_pi.upper_double() > 0.31830988618379064);
  CHECK_THROWS_AS(y + MuLaurent::monomial(1, PiPolynomial(1)), opf::PreconditionError);
}
