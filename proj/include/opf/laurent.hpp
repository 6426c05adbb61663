#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "opf/interval.hpp"

namespace opf::arith {

/// Finite sum  sum_k c_k pi^k  with exact rational c_k and integer k (negative allowed).
/// Zero coefficients are never stored.
class PiPolynomial {
 public:
  PiPolynomial() = default;
  PiPolynomial(long constant);  // NOLINT(google-explicit-constructor)
  PiPolynomial(const mpq_class& constant);  // NOLINT(google-explicit-constructor)
  PiPolynomial(std::initializer_list<std::pair<int, mpq_class>> terms);

  static PiPolynomial pi_power(int k, const mpq_class& coefficient = 1);

  const std::map<int, mpq_class>& terms() const { return terms_; }
  mpq_class coefficient(int k) const;
  bool is_zero() const { return terms_.empty(); }

  PiPolynomial& operator+=(const PiPolynomial& other);
  PiPolynomial& operator-=(const PiPolynomial& other);
  PiPolynomial& operator*=(const PiPolynomial& other);
  friend PiPolynomial operator+(PiPolynomial a, const PiPolynomial& b) { return a += b; }
  friend PiPolynomial operator-(PiPolynomial a, const PiPolynomial& b) { return a -= b; }
  friend PiPolynomial operator*(PiPolynomial a, const PiPolynomial& b) { return a *= b; }
  friend PiPolynomial operator-(const PiPolynomial& a);
  friend bool operator==(const PiPolynomial& a, const PiPolynomial& b) { return a.terms_ == b.terms_; }

  Interval evaluate(const Interval& pi) const;
  std::string to_string() const;

 private:
  void add_term(int k, const mpq_class& c);
  std::map<int, mpq_class> terms_;
};

enum class LaurentVariable {
  inverse_sqrt_n,  // x = n^{-1/2}
  inverse_mu,      // x = 1 / (pi sqrt(n))
};

/// sum_j P_j(pi) x^j with x = n^{-1/2} or mu(n)^{-1}; j is any integer.
class MuLaurent {
 public:
  explicit MuLaurent(LaurentVariable variable = LaurentVariable::inverse_sqrt_n) : variable_(variable) {}
  MuLaurent(LaurentVariable variable, std::initializer_list<std::pair<int, PiPolynomial>> terms);

  static MuLaurent constant(const PiPolynomial& c, LaurentVariable variable = LaurentVariable::inverse_sqrt_n);
  /// c * x^j
  static MuLaurent monomial(int j, const PiPolynomial& c,
                            LaurentVariable variable = LaurentVariable::inverse_sqrt_n);

  LaurentVariable variable() const { return variable_; }
  const std::map<int, PiPolynomial>& terms() const { return terms_; }
  PiPolynomial coefficient(int j) const;

  MuLaurent& operator+=(const MuLaurent& other);
  MuLaurent& operator-=(const MuLaurent& other);
  MuLaurent& operator*=(const MuLaurent& other);
  friend MuLaurent operator+(MuLaurent a, const MuLaurent& b) { return a += b; }
  friend MuLaurent operator-(MuLaurent a, const MuLaurent& b) { return a -= b; }
  friend MuLaurent operator*(MuLaurent a, const MuLaurent& b) { return a *= b; }
  friend bool operator==(const MuLaurent& a, const MuLaurent& b) {
    return a.variable_ == b.variable_ && a.terms_ == b.terms_;
  }

  /// Enclosure of the value at n, with a single pi enclosure at the given precision.
  Interval evaluate(unsigned long n, Bits precision) const;
  Interval evaluate(unsigned long n, const Interval& pi) const;

 private:
  void add_term(int j, const PiPolynomial& c);
  void require_same_variable(const MuLaurent& other) const;

  LaurentVariable variable_;
  std::map<int, PiPolynomial> terms_;
};

}  // namespace opf::arith
