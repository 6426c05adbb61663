#include "opf/named_bounds.hpp"

#include <map>

namespace opf::verify {

using arith::PiPolynomial;

MuLaurent x_power(int j, const mpq_class& c) { return MuLaurent::monomial(j, PiPolynomial(c)); }

MuLaurent pi_x_power(int k, int j, const mpq_class& c) {
  return MuLaurent::monomial(j, PiPolynomial::pi_power(k, c));
}

namespace {

mpq_class q(long a, long b = 1) {
  mpq_class r(a, b);
  r.canonicalize();
  return r;
}

PiPolynomial pip(std::initializer_list<std::pair<int, mpq_class>> terms) { return PiPolynomial(terms); }

MuLaurent with_coefficients(const std::vector<PiPolynomial>& coefficients) {
  MuLaurent m;
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    m += MuLaurent::monomial(static_cast<int>(j), coefficients[j]);
  }
  return m;
}

MuLaurent s_series() {
  // 1 - pi/(4n^{3/2}) + 1/n^2 - 3/(4 pi n^{5/2}) + (pi^4 - 32)/(32 pi^2 n^3) - (5/(4pi^3) + 21pi/64)/n^{7/2}
  return with_coefficients({
      1,
      {},
      {},
      pip({{1, q(-1, 4)}}),
      1,
      pip({{-1, q(-3, 4)}}),
      pip({{2, q(1, 32)}, {-2, q(-1)}}),
      pip({{-3, q(-5, 4)}, {1, q(-21, 64)}}),
  });
}

MuLaurent t_series() { return x_power(0) + pi_x_power(1, 3, q(1, 2)) + x_power(4, q(-7, 2)); }
MuLaurent v_series() { return x_power(0) + pi_x_power(1, 3, q(1, 4)) + x_power(4, q(-25, 16)); }

MuLaurent s1_plus() {
  return with_coefficients({
      1,
      {},
      q(1, 2),
      pip({{-1, q(1, 2)}}),
      pip({{-2, q(1, 2)}, {0, q(-1, 8)}}),
      pip({{-3, q(1, 2)}, {-1, q(-1, 8)}}),
      pip({{0, q(1, 16)}, {-4, q(1, 2)}, {-2, q(-1, 8)}}),
      pip({{-5, q(1, 2)}, {-3, q(-1, 8)}, {-1, q(1, 16)}}),
  });
}

MuLaurent s1_minus() {
  return with_coefficients({
      1,
      {},
      q(-1, 2),
      pip({{-1, q(-1, 2)}}),
      -pip({{-2, q(1, 2)}, {0, q(1, 8)}}),
      -pip({{-3, q(1, 2)}, {-1, q(1, 8)}}),
      -pip({{0, q(1, 16)}, {-4, q(1, 2)}, {-2, q(1, 8)}}),
      -pip({{-5, q(1, 2)}, {-3, q(1, 8)}, {-1, q(1, 16)}}),
  });
}

MuLaurent s2(int sign) {
  return x_power(0) + x_power(2, q(-3 * sign, 2)) + x_power(4, q(15, 8)) + x_power(6, q(-35 * sign, 16));
}

MuLaurent s30_plus() {
  return pi_x_power(1, 1, q(1, 2)) + pi_x_power(1, 3, q(-1, 8)) + pi_x_power(1, 5, q(1, 16)) +
         pi_x_power(1, 7, q(-5, 128));
}

// Coefficients of e^{+-(pi/2) x - ...} as displayed, kept in factored form.
MuLaurent s3(int sign) {
  const mpq_class sg(sign);
  const PiPolynomial pi1 = PiPolynomial::pi_power(1);
  const PiPolynomial pi2 = PiPolynomial::pi_power(2);
  return with_coefficients({
      1,
      pip({{1, sg * q(1, 2)}}),
      pip({{2, q(1, 8)}}),
      PiPolynomial(sg * q(1, 48)) * pi1 * pip({{2, 1}, {0, sg * q(-6)}}),
      PiPolynomial(q(1, 384)) * pi2 * pip({{2, 1}, {0, sg * q(-24)}}),
      PiPolynomial(sg * q(1, 3840)) * pi1 * pip({{4, 1}, {2, sg * q(-60)}, {0, q(240)}}),
      PiPolynomial(q(1, 46080)) * pi2 * pip({{4, 1}, {2, sg * q(-120)}, {0, q(1800)}}),
      PiPolynomial(sg * q(1, 645120)) * pi1 * pip({{6, 1}, {4, sg * q(-210)}, {2, q(7560)}, {0, sg * q(-25200)}}),
  });
}

MuLaurent one_plus_x8(long c) { return x_power(0) + x_power(8, q(c)); }

std::map<BoundName, NamedBound> build_catalogue() {
  const MuLaurent s = s_series();
  const MuLaurent s1p = s1_plus();
  const MuLaurent s1m = s1_minus();
  const MuLaurent s2p = s2(+1);
  const MuLaurent s2m = s2(-1);
  const MuLaurent s3p = s3(+1);
  const MuLaurent s3m = s3(-1);
  std::map<BoundName, NamedBound> c;
  auto single = [&c](BoundName name, MuLaurent m) { c.emplace(name, NamedBound{name, {std::move(m)}}); };
  single(BoundName::s, s);
  single(BoundName::t, t_series());
  single(BoundName::v, v_series());
  single(BoundName::U, s + x_power(8, 20));
  single(BoundName::L, s - x_power(8, 15));
  single(BoundName::s1_plus, s1p);
  single(BoundName::s2_plus, s2p);
  single(BoundName::s30_plus, s30_plus());
  single(BoundName::s3_plus, s3p);
  single(BoundName::s1_minus, s1m);
  single(BoundName::s2_minus, s2m);
  single(BoundName::s3_minus, s3m);
  c.emplace(BoundName::U_plus, NamedBound{BoundName::U_plus,
                                          {s1p + x_power(8, 2), s2p + x_power(8, 3), s3p + x_power(8, 1),
                                           one_plus_x8(4), one_plus_x8(1)}});
  c.emplace(BoundName::L_plus, NamedBound{BoundName::L_plus,
                                          {s1p - x_power(8, 2), s2p - x_power(8, 3), s3p - x_power(8, 1),
                                           one_plus_x8(-1)}});
  c.emplace(BoundName::U_minus, NamedBound{BoundName::U_minus,
                                           {s1m + x_power(8, 1), s2m + x_power(8, 3), s3m + x_power(8, 1),
                                            one_plus_x8(1)}});
  c.emplace(BoundName::L_minus, NamedBound{BoundName::L_minus,
                                           {s1m - x_power(8, 1), s2m, s3m, one_plus_x8(-1), one_plus_x8(-1)}});
  return c;
}

const std::vector<std::pair<BoundName, std::string_view>>& name_table() {
  static const std::vector<std::pair<BoundName, std::string_view>> names = {
      {BoundName::s, "s"},          {BoundName::t, "t"},           {BoundName::v, "v"},
      {BoundName::U, "U"},          {BoundName::L, "L"},           {BoundName::s1_plus, "s1+"},
      {BoundName::s2_plus, "s2+"},  {BoundName::s30_plus, "s30+"}, {BoundName::s3_plus, "s3+"},
      {BoundName::s1_minus, "s1-"}, {BoundName::s2_minus, "s2-"},  {BoundName::s3_minus, "s3-"},
      {BoundName::L_plus, "Lplus"}, {BoundName::U_plus, "Uplus"},  {BoundName::L_minus, "Lminus"},
      {BoundName::U_minus, "Uminus"},
  };
  return names;
}

}  // namespace

std::string_view to_string(BoundName name) {
  for (const auto& [n, s] : name_table()) {
    if (n == name) return s;
  }
  return "?";
}

std::optional<BoundName> parse_bound_name(std::string_view text) {
  for (const auto& [n, s] : name_table()) {
    if (s == text) return n;
  }
  return std::nullopt;
}

const std::vector<BoundName>& all_bound_names() {
  static const std::vector<BoundName> names = [] {
    std::vector<BoundName> v;
    for (const auto& [n, s] : name_table()) v.push_back(n);
    return v;
  }();
  return names;
}

Interval NamedBound::evaluate(unsigned long n, Bits precision) const {
  return evaluate(n, arith::enclose_pi(precision));
}

Interval NamedBound::evaluate(unsigned long n, const Interval& pi) const {
  Interval acc = Interval::exact(1, pi.precision());
  for (const auto& f : factors) acc = acc * f.evaluate(n, pi);
  return acc;
}

const NamedBound& named_bound(BoundName name) {
  static const std::map<BoundName, NamedBound> catalogue = build_catalogue();
  return catalogue.at(name);
}

Interval eval_named_bound(BoundName name, unsigned long n, Bits precision) {
  return named_bound(name).evaluate(n, precision);
}

}  // namespace opf::verify
