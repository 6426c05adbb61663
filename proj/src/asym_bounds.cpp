#include "opf/asym_bounds.hpp"

#include <string>

#include "opf/errors.hpp"
#include "opf/rademacher.hpp"

namespace opf::asym {

using arith::Comparison;
using arith::Enclosure;
using arith::enclose_pi;
using arith::MuLaurent;
using arith::Operand;
using arith::PiPolynomial;
using arith::StrictInequality;

namespace {

constexpr unsigned long kBaseThreshold = 184;

Interval mu_of(unsigned long n, Bits p) { return rademacher::mu_hat(n, p).enclosure; }

Interval n0_enclosure(unsigned m, Bits p) {
  if (m == 1) return Interval::exact(1, p);
  Interval lm = arith::log(Interval::exact(static_cast<long>(m), p));
  return 2L * static_cast<long>(m) * lm - static_cast<long>(m) * arith::log(lm);
}

void require_n1(unsigned long n, unsigned m) {
  if (m < 2) throw PreconditionError("m must be >= 2");
  const unsigned long n1 = n1_threshold(m).n1;
  if (n < n1) {
    throw PreconditionError("n = " + std::to_string(n) + " is below N1(" + std::to_string(m) +
                            ") = " + std::to_string(n1));
  }
}

}  // namespace

mpq_class upper_endpoint(const Interval& x) {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), x.hi());
  return q;
}

arith::Verdict power_exp_below_one(const mpq_class& x, unsigned m, const PrecisionPolicy& policy) {
  if (x <= 0) throw PreconditionError("power_exp_below_one needs x > 0");
  Enclosure f = [x, m](Bits p) {
    Interval xi = Interval::exact(x, p);
    return static_cast<long>(m) * arith::log(xi) - xi;
  };
  return arith::compare_certified(Operand(f), Operand(mpq_class(0)), policy);
}

ThresholdParams n0_threshold(unsigned m, const PrecisionPolicy& policy) {
  if (m == 0) throw PreconditionError("m must be >= 1");
  ThresholdParams t;
  t.m = m;
  t.n0 = n0_enclosure(m, policy.start);
  t.n0_check = power_exp_below_one(upper_endpoint(t.n0), m, policy).outcome;
  return t;
}

ThresholdParams n1_threshold(unsigned m, const PrecisionPolicy& policy) {
  if (m < 2) throw PreconditionError("N1 is defined for m >= 2");
  ThresholdParams t = n0_threshold(m, policy);
  const Bits p = policy.start;
  const Interval pi = enclose_pi(p);
  Interval scaled = 9L * arith::square(t.n0) / (4L * arith::square(pi));
  mpz_class ceiling;
  mpfr_get_z(ceiling.get_mpz_t(), scaled.hi(), MPFR_RNDU);
  t.n1 = std::max<unsigned long>(kBaseThreshold, ceiling.get_ui());
  return t;
}

Certificate y_bound_check(const OverpartitionTable& table, unsigned long n, unsigned m,
                          const PrecisionPolicy& policy) {
  require_n1(n, m);
  if (n > table.max_n()) throw std::out_of_range("n beyond table");
  const mpz_class value = table[n];
  Enclosure deviation = [value, n](Bits p) {
    return arith::abs(Interval::exact(value, p) / rademacher::main_term(n, p) - 1L);
  };
  Enclosure bound = [n, m](Bits p) {
    Interval base = Interval::exact(mpq_class(3, 2), p);
    return arith::pow(base, static_cast<long>(m) + 1) * arith::pow(mu_of(n, p), -static_cast<long>(m));
  };
  return arith::certify_strict({StrictInequality{deviation, bound}}, policy);
}

mpq_class binomial(const mpq_class& top, unsigned k) {
  mpq_class acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    acc *= (top - static_cast<long>(i));
    acc /= static_cast<long>(i + 1);
  }
  acc.canonicalize();
  return acc;
}

TRatioTerms t_ratio_terms(unsigned long n, unsigned m, Bits p) {
  if (n == 0 || m == 0) throw PreconditionError("t_ratio_terms needs n >= 1 and m >= 1");
  TRatioTerms t;
  t.m = m;
  t.m_half = m / 2;
  // pi^{2k} mu^{-2k} = n^{-k}, so the binomial layer is exact.
  const mpq_class inv_n(1, static_cast<long>(n));
  const mpq_class half(1, 2);
  const mpq_class minus_three_halves(-3, 2);
  mpq_class mu1 = 0;
  mpq_class mu2 = 0;
  mpq_class power = 1;
  for (unsigned k = 0; k <= t.m_half; ++k) {
    mu1 += binomial(half, k) * power;
    mu2 += binomial(minus_three_halves, k) * power;
    power *= inv_n;
  }
  const mpq_class eps1 = abs(binomial(half, t.m_half + 1)) * power;
  const mpq_class eps2 = abs(binomial(minus_three_halves, t.m_half + 1)) * power;

  t.mu = mu_of(n, p);
  t.mu1 = Interval::exact(mu1, p);
  t.mu2 = Interval::exact(mu2, p);
  t.eps1 = Interval::exact(eps1, p);
  t.eps2 = Interval::exact(eps2, p);
  t.nu = t.mu * (t.mu1 - 1L);

  const Interval inv_mu = 1L / t.mu;
  Interval geometric = Interval::exact(0, p);
  for (unsigned k = 0; k <= m; ++k) geometric = geometric + arith::pow(inv_mu, k);
  Interval geometric_upper = geometric + 2L * arith::pow(inv_mu, static_cast<long>(m) + 1);
  t.nu1 = (t.mu1 - t.eps1 - inv_mu) * geometric;
  t.nu2 = (t.mu1 + t.eps1 - inv_mu) * geometric_upper;
  return t;
}

RatioBounds t_ratio_bounds(unsigned long n, unsigned m, Bits p) {
  const TRatioTerms t = t_ratio_terms(n, m, p);
  const Interval shift = t.mu * t.eps1;
  if (!certainly_less(shift, Interval::exact(mpq_class(1, 2), p))) {
    throw PreconditionError("mu(n) eps1(n) < 1/2 fails at n = " + std::to_string(n) + ", m = " + std::to_string(m));
  }
  // mu >= 2 keeps the factor-2 geometric tail valid.
  if (!certainly_less(Interval::exact(2, p), t.mu)) throw PreconditionError("mu(n) >= 2 required");

  Interval taylor = Interval::exact(0, p);
  Interval factorial = Interval::exact(1, p);
  for (unsigned k = 0; k <= m; ++k) {
    if (k > 0) factorial = factorial * static_cast<long>(k);
    taylor = taylor + arith::pow(t.nu, k) / factorial;
  }
  factorial = factorial * (static_cast<long>(m) + 1);
  Interval remainder = arith::exp(t.nu) * arith::pow(t.nu, static_cast<long>(m) + 1) / factorial;

  RatioBounds b;
  b.lo = t.nu1 * (t.mu2 - t.eps2) * (1L - shift) * taylor;
  b.hi = t.nu2 * (t.mu2 + t.eps2) * (1L + 2L * shift) * (taylor + remainder);
  return b;
}

Interval direct_t_ratio(unsigned long n, Bits p) {
  return rademacher::main_term(n + 1, p) / rademacher::main_term(n, p);
}

RatioBounds p_ratio_window(const OverpartitionTable& table, unsigned long n, unsigned m, Bits p) {
  require_n1(n, m);
  if (n + 1 > table.max_n()) throw std::out_of_range("n + 1 beyond table");
  const Interval ratio = direct_t_ratio(n, p);
  const Interval scale = arith::pow(Interval::exact(2, p), static_cast<long>(m)) *
                         arith::pow(mu_of(n, p), -static_cast<long>(m));
  return RatioBounds{ratio * (1L - 4L * scale), ratio * (1L + 6L * scale)};
}

Certificate certify_p_ratio_window(const OverpartitionTable& table, unsigned long n, unsigned m,
                                   const PrecisionPolicy& policy) {
  require_n1(n, m);
  const mpq_class ratio = exact::forward_ratio(table, n);
  const OverpartitionTable* tab = &table;
  Enclosure lo = [tab, n, m](Bits p) { return p_ratio_window(*tab, n, m, p).lo; };
  Enclosure hi = [tab, n, m](Bits p) { return p_ratio_window(*tab, n, m, p).hi; };
  return arith::certify_strict({StrictInequality{lo, ratio}, StrictInequality{ratio, hi}}, policy);
}

MuLaurent RatioExpansion::series() const {
  MuLaurent s(arith::LaurentVariable::inverse_mu);
  for (int k = 0; k < 5; ++k) s += MuLaurent::monomial(k, a[k], arith::LaurentVariable::inverse_mu);
  return s;
}

const RatioExpansion& ratio_expansion_m4() {
  static const RatioExpansion expansion = [] {
    RatioExpansion e;
    e.a[0] = PiPolynomial(1);
    e.a[1] = PiPolynomial{{2, mpq_class(1, 2)}};
    e.a[2] = PiPolynomial{{2, -1}, {4, mpq_class(1, 8)}};
    e.a[3] = PiPolynomial{{2, mpq_class(1, 2)}, {4, mpq_class(-5, 8)}, {6, mpq_class(1, 48)}};
    e.a[4] = PiPolynomial{{2, mpq_class(1, 2)}, {4, mpq_class(5, 4)}, {6, mpq_class(-3, 16)}, {8, mpq_class(1, 384)}};
    return e;
  }();
  return expansion;
}

Certificate explicit_ratio_window(const OverpartitionTable& table, unsigned long n, const PrecisionPolicy& policy) {
  const RatioExpansion& e = ratio_expansion_m4();
  if (n < e.valid_from) throw PreconditionError("explicit ratio window is stated for n > 66");
  const mpq_class ratio = exact::forward_ratio(table, n);
  const MuLaurent lower = e.series() - MuLaurent::monomial(5, PiPolynomial(e.lower_slack), arith::LaurentVariable::inverse_mu);
  const MuLaurent upper = e.series() + MuLaurent::monomial(5, PiPolynomial(e.upper_slack), arith::LaurentVariable::inverse_mu);
  Enclosure lo = [lower, n](Bits p) { return lower.evaluate(n, p); };
  Enclosure hi = [upper, n](Bits p) { return upper.evaluate(n, p); };
  return arith::certify_strict({StrictInequality{lo, ratio}, StrictInequality{ratio, hi}}, policy);
}

}  // namespace opf::asym
