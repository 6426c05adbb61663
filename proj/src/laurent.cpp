#include "opf/laurent.hpp"

#include <sstream>

#include "opf/errors.hpp"

namespace opf::arith {

PiPolynomial::PiPolynomial(long constant) { add_term(0, mpq_class(constant)); }

PiPolynomial::PiPolynomial(const mpq_class& constant) { add_term(0, constant); }

PiPolynomial::PiPolynomial(std::initializer_list<std::pair<int, mpq_class>> terms) {
  for (const auto& [k, c] : terms) add_term(k, c);
}

PiPolynomial PiPolynomial::pi_power(int k, const mpq_class& coefficient) {
  PiPolynomial p;
  p.add_term(k, coefficient);
  return p;
}

mpq_class PiPolynomial::coefficient(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void PiPolynomial::add_term(int k, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PiPolynomial& PiPolynomial::operator+=(const PiPolynomial& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

PiPolynomial& PiPolynomial::operator-=(const PiPolynomial& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

PiPolynomial& PiPolynomial::operator*=(const PiPolynomial& other) {
  PiPolynomial product;
  for (const auto& [k1, c1] : terms_) {
    for (const auto& [k2, c2] : other.terms_) product.add_term(k1 + k2, c1 * c2);
  }
  *this = std::move(product);
  return *this;
}

PiPolynomial operator-(const PiPolynomial& a) {
  PiPolynomial r;
  for (const auto& [k, c] : a.terms_) r.add_term(k, -c);
  return r;
}

Interval PiPolynomial::evaluate(const Interval& pi) const {
  Interval acc = Interval::exact(0, pi.precision());
  for (const auto& [k, c] : terms_) acc = acc + pow(pi, k) * c;
  return acc;
}

std::string PiPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.get_str() << ")";
    if (k != 0) os << "*pi^" << k;
  }
  return os.str();
}

MuLaurent::MuLaurent(LaurentVariable variable, std::initializer_list<std::pair<int, PiPolynomial>> terms)
    : variable_(variable) {
  for (const auto& [j, c] : terms) add_term(j, c);
}

MuLaurent MuLaurent::constant(const PiPolynomial& c, LaurentVariable variable) {
  return monomial(0, c, variable);
}

MuLaurent MuLaurent::monomial(int j, const PiPolynomial& c, LaurentVariable variable) {
  MuLaurent m(variable);
  m.add_term(j, c);
  return m;
}

PiPolynomial MuLaurent::coefficient(int j) const {
  auto it = terms_.find(j);
  return it == terms_.end() ? PiPolynomial() : it->second;
}

void MuLaurent::add_term(int j, const PiPolynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(j, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MuLaurent::require_same_variable(const MuLaurent& other) const {
  if (variable_ != other.variable_) throw PreconditionError("MuLaurent operands use different variables");
}

MuLaurent& MuLaurent::operator+=(const MuLaurent& other) {
  require_same_variable(other);
  for (const auto& [j, c] : other.terms_) add_term(j, c);
  return *this;
}

MuLaurent& MuLaurent::operator-=(const MuLaurent& other) {
  require_same_variable(other);
  for (const auto& [j, c] : other.terms_) add_term(j, -c);
  return *this;
}

MuLaurent& MuLaurent::operator*=(const MuLaurent& other) {
  require_same_variable(other);
  MuLaurent product(variable_);
  for (const auto& [j1, c1] : terms_) {
    for (const auto& [j2, c2] : other.terms_) product.add_term(j1 + j2, c1 * c2);
  }
  *this = std::move(product);
  return *this;
}

Interval MuLaurent::evaluate(unsigned long n, Bits precision) const {
  return evaluate(n, enclose_pi(precision));
}

Interval MuLaurent::evaluate(unsigned long n, const Interval& pi) const {
  if (n == 0) throw DomainError("MuLaurent evaluated at n = 0");
  const Bits p = pi.precision();
  Interval x = 1 / sqrt_of(n, p);
  if (variable_ == LaurentVariable::inverse_mu) x = x / pi;
  Interval acc = Interval::exact(0, p);
  for (const auto& [j, c] : terms_) acc = acc + c.evaluate(pi) * pow(x, j);
  return acc;
}

}  // namespace opf::arith
