#include <doctest.h>

#include "opf/exact_core.hpp"
#include "opf/named_bounds.hpp"

using namespace opf::verify;
using opf::arith::PiPolynomial;

TEST_CASE("names round-trip") {
  CHECK(all_bound_names().size() == 16);
  for (BoundName b : all_bound_names()) CHECK(parse_bound_name(to_string(b)) == b);
  CHECK_FALSE(parse_bound_name("nope").has_value());
  CHECK(to_string(BoundName::s30_plus) == "s30+");
}

TEST_CASE("s_n coefficients") {
  const auto& s = named_bound(BoundName::s).factors.at(0);
  CHECK(s.coefficient(0) == PiPolynomial(1));
  CHECK(s.coefficient(1).is_zero());
  CHECK(s.coefficient(3) == PiPolynomial::pi_power(1, mpq_class(-1, 4)));
  CHECK(s.coefficient(4) == PiPolynomial(1));
  CHECK(s.coefficient(5) == PiPolynomial::pi_power(-1, mpq_class(-3, 4)));
  // (pi^4 - 32) / (32 pi^2)
  CHECK(s.coefficient(6) == PiPolynomial({{2, mpq_class(1, 32)}, {-2, -1}}));
  CHECK(s.coefficient(7) == PiPolynomial({{-3, mpq_class(-5, 4)}, {1, mpq_class(-21, 64)}}));
}

TEST_CASE("single-factor goldens at n = 100 and 1000") {
  struct Golden {
    BoundName name;
    unsigned long n;
    double value;
  };
  const Golden goldens[] = {
      {BoundName::s, 100, 0.99931231450145931490}, {BoundName::t, 100, 1.0012207963267948966},
      {BoundName::v, 100, 1.0006291481633974483},  {BoundName::s, 1000, 0.99997615615318492638},
      {BoundName::t, 1000, 1.0000461729413289805}, {BoundName::v, 1000, 1.0000232739706644903},
  };
  for (const auto& g : goldens) {
    const auto x = eval_named_bound(g.name, g.n, 128);
    CHECK(x.lower_double() <= g.value * (1 + 1e-15));
    CHECK(x.upper_double() >= g.value * (1 - 1e-15));
    CHECK(x.width_upper() < 1e-30);
  }
  // U - L = 35 / n^4
  const auto gap = eval_named_bound(BoundName::U, 10, 128) - eval_named_bound(BoundName::L, 10, 128);
  CHECK(gap.contains(mpq_class(35, 10000)));
}

TEST_CASE("the printed sign of the n^-3 term of s_n breaks the window") {
  // Printed as -(32 + pi^4)/(32 pi^2); off from the series of the main term by pi^2/16.
  const auto table = opf::exact::build_table(2001);
  const auto& s = named_bound(BoundName::s).factors.at(0);
  const MuLaurent literal =
      s - x_power(6) * MuLaurent::constant(s.coefficient(6)) +
      MuLaurent::monomial(6, PiPolynomial({{2, mpq_class(-1, 32)}, {-2, -1}}));
  const unsigned long n = 2000;
  const mpq_class u = opf::exact::u_ratio(table, n);
  // The literal form sits below the truth by about pi^2/(16 n^3), far more than the 20/n^4 slack.
  const auto upper = literal.evaluate(n, 128) + x_power(8, 20).evaluate(n, 128);
  CHECK(certainly_less(upper, Interval::exact(u, 128)));
  // while the corrected form holds there
  CHECK(certainly_less(eval_named_bound(BoundName::L, n, 128), Interval::exact(u, 128)));
  CHECK(certainly_less(Interval::exact(u, 128), eval_named_bound(BoundName::U, n, 128)));
}

TEST_CASE("sandwich products") {
  CHECK(named_bound(BoundName::U_plus).factors.size() == 5);
  CHECK(named_bound(BoundName::L_plus).factors.size() == 4);
  CHECK(named_bound(BoundName::U_minus).factors.size() == 4);
  CHECK(named_bound(BoundName::L_minus).factors.size() == 5);
  CHECK(named_bound(BoundName::s2_plus).factors.at(0).coefficient(6) == PiPolynomial(mpq_class(-35, 16)));
  CHECK(named_bound(BoundName::s3_minus).factors.at(0).coefficient(1) == PiPolynomial::pi_power(1, mpq_class(-1, 2)));
  const auto table = opf::exact::build_table(1001);
  for (unsigned long n : {200UL, 1000UL}) {
    const Interval fwd = Interval::exact(opf::exact::forward_ratio(table, n), 128);
    CHECK(certainly_less(eval_named_bound(BoundName::L_plus, n, 128), fwd));
    CHECK(certainly_less(fwd, eval_named_bound(BoundName::U_plus, n, 128)));
  }
}
