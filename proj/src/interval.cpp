#include "opf/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "opf/errors.hpp"

namespace opf::arith {

class IntervalAccess {
 public:
  static mpfr_ptr lo(Interval& x) { return x.lo_; }
  static mpfr_ptr hi(Interval& x) { return x.hi_; }
};

namespace {

mpfr_ptr lo_of(Interval& x) { return IntervalAccess::lo(x); }
mpfr_ptr hi_of(Interval& x) { return IntervalAccess::hi(x); }

Bits joint(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

// RAII scratch float.
struct Float {
  mpfr_t v;
  explicit Float(Bits p) { mpfr_init2(v, p); }
  ~Float() { mpfr_clear(v); }
  Float(const Float&) = delete;
  Float& operator=(const Float&) = delete;
};

}  // namespace

Interval::Interval(Bits precision) {
  precision = std::max<Bits>(precision, MPFR_PREC_MIN);
  mpfr_init2(lo_, precision);
  mpfr_init2(hi_, precision);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) {
  mpfr_init2(lo_, other.precision());
  mpfr_init2(hi_, other.precision());
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept {
  mpfr_init2(lo_, MPFR_PREC_MIN);
  mpfr_init2(hi_, MPFR_PREC_MIN);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, other.precision());
    mpfr_set_prec(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::exact(long value, Bits precision) {
  Interval r(precision);
  mpfr_set_si(r.lo_, value, MPFR_RNDD);
  mpfr_set_si(r.hi_, value, MPFR_RNDU);
  return r;
}

Interval Interval::exact(const mpz_class& value, Bits precision) {
  Interval r(precision);
  mpfr_set_z(r.lo_, value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, value.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::exact(const mpq_class& value, Bits precision) {
  Interval r(precision);
  mpfr_set_q(r.lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, value.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_bounds(mpfr_srcptr lo, mpfr_srcptr hi, Bits precision) {
  if (mpfr_cmp(lo, hi) > 0) throw DomainError("interval bounds out of order");
  Interval r(precision);
  mpfr_set(r.lo_, lo, MPFR_RNDD);
  mpfr_set(r.hi_, hi, MPFR_RNDU);
  return r;
}

double Interval::mid_double() const {
  Float m(precision() + 1);
  mpfr_add(m.v, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m.v, m.v, 1, MPFR_RNDN);
  return mpfr_get_d(m.v, MPFR_RNDN);
}

double Interval::width_upper() const {
  Float w(precision());
  mpfr_sub(w.v, hi_, lo_, MPFR_RNDU);
  return mpfr_get_d(w.v, MPFR_RNDU);
}

double Interval::relative_width_upper() const {
  if (contains_zero()) return std::numeric_limits<double>::infinity();
  Float w(precision());
  Float m(precision());
  mpfr_sub(w.v, hi_, lo_, MPFR_RNDU);
  if (mpfr_sgn(lo_) > 0) {
    mpfr_set(m.v, lo_, MPFR_RNDD);
  } else {
    mpfr_neg(m.v, hi_, MPFR_RNDD);
  }
  mpfr_div(w.v, w.v, m.v, MPFR_RNDU);
  return mpfr_get_d(w.v, MPFR_RNDU);
}

bool Interval::contains(const mpq_class& value) const {
  return mpfr_cmp_q(lo_, value.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, value.get_mpq_t()) >= 0;
}

bool Interval::contains(const mpz_class& value) const {
  return mpfr_cmp_z(lo_, value.get_mpz_t()) <= 0 && mpfr_cmp_z(hi_, value.get_mpz_t()) >= 0;
}

bool Interval::contains(const Interval& inner) const {
  return mpfr_cmp(lo_, inner.lo_) <= 0 && mpfr_cmp(hi_, inner.hi_) >= 0;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

Interval Interval::inflated(const Interval& radius) const {
  Interval r_abs = abs(radius);
  Interval r(joint(*this, radius));
  mpfr_sub(r.lo_, lo_, r_abs.hi_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, r_abs.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::at_precision(Bits precision) const { return from_bounds(lo_, hi_, precision); }

std::string Interval::to_string(int digits) const {
  auto fmt = [digits](mpfr_srcptr v, mpfr_rnd_t rnd) {
    char* raw = nullptr;
    mpfr_asprintf(&raw, rnd == MPFR_RNDD ? "%.*RDg" : "%.*RUg", digits, v);
    std::string s(raw);
    mpfr_free_str(raw);
    return s;
  };
  return "[" + fmt(lo_, MPFR_RNDD) + ", " + fmt(hi_, MPFR_RNDU) + "]";
}

Interval operator-(const Interval& a) {
  Interval r(a.precision());
  mpfr_neg(lo_of(r), a.hi(), MPFR_RNDD);
  mpfr_neg(hi_of(r), a.lo(), MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_add(lo_of(r), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_add(hi_of(r), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_sub(lo_of(r), a.lo(), b.hi(), MPFR_RNDD);
  mpfr_sub(hi_of(r), a.hi(), b.lo(), MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const Bits p = joint(a, b);
  Interval r(p);
  if (mpfr_sgn(a.lo()) >= 0 && mpfr_sgn(b.lo()) >= 0) {
    mpfr_mul(lo_of(r), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_mul(hi_of(r), a.hi(), b.hi(), MPFR_RNDU);
    return r;
  }
  mpfr_srcptr xs[2] = {a.lo(), a.hi()};
  mpfr_srcptr ys[2] = {b.lo(), b.hi()};
  Float t(p);
  bool first = true;
  for (mpfr_srcptr x : xs) {
    for (mpfr_srcptr y : ys) {
      mpfr_mul(t.v, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t.v, lo_of(r)) < 0) mpfr_set(lo_of(r), t.v, MPFR_RNDD);
      mpfr_mul(t.v, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t.v, hi_of(r)) > 0) mpfr_set(hi_of(r), t.v, MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("division by an interval containing zero");
  const Bits p = joint(a, b);
  Interval r(p);
  mpfr_srcptr xs[2] = {a.lo(), a.hi()};
  mpfr_srcptr ys[2] = {b.lo(), b.hi()};
  Float t(p);
  bool first = true;
  for (mpfr_srcptr x : xs) {
    for (mpfr_srcptr y : ys) {
      mpfr_div(t.v, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t.v, lo_of(r)) < 0) mpfr_set(lo_of(r), t.v, MPFR_RNDD);
      mpfr_div(t.v, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t.v, hi_of(r)) > 0) mpfr_set(hi_of(r), t.v, MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

Interval operator+(const Interval& a, long b) { return a + Interval::exact(b, a.precision()); }
Interval operator+(long a, const Interval& b) { return b + a; }
Interval operator-(const Interval& a, long b) { return a - Interval::exact(b, a.precision()); }
Interval operator-(long a, const Interval& b) { return Interval::exact(a, b.precision()) - b; }
Interval operator*(const Interval& a, long b) { return a * Interval::exact(b, a.precision()); }
Interval operator*(long a, const Interval& b) { return b * a; }
Interval operator/(const Interval& a, long b) { return a / Interval::exact(b, a.precision()); }
Interval operator/(long a, const Interval& b) { return Interval::exact(a, b.precision()) / b; }
Interval operator+(const Interval& a, const mpq_class& b) { return a + Interval::exact(b, a.precision()); }
Interval operator-(const Interval& a, const mpq_class& b) { return a - Interval::exact(b, a.precision()); }
Interval operator*(const Interval& a, const mpq_class& b) { return a * Interval::exact(b, a.precision()); }

namespace {

using UnaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

Interval monotone_increasing(const Interval& a, UnaryFn fn) {
  Interval r(a.precision());
  fn(lo_of(r), a.lo(), MPFR_RNDD);
  fn(hi_of(r), a.hi(), MPFR_RNDU);
  return r;
}

}  // namespace

Interval sqrt(const Interval& a) {
  if (mpfr_sgn(a.lo()) < 0) throw DomainError("square root of a possibly negative interval");
  return monotone_increasing(a, mpfr_sqrt);
}

Interval exp(const Interval& a) { return monotone_increasing(a, mpfr_exp); }

Interval log(const Interval& a) {
  if (mpfr_sgn(a.lo()) <= 0) throw DomainError("logarithm of a possibly non-positive interval");
  return monotone_increasing(a, mpfr_log);
}

Interval sinh(const Interval& a) { return monotone_increasing(a, mpfr_sinh); }

Interval cosh(const Interval& a) {
  Interval r(a.precision());
  if (a.contains_zero()) {
    mpfr_set_ui(lo_of(r), 1, MPFR_RNDD);
    Float t(a.precision());
    mpfr_cosh(hi_of(r), a.lo(), MPFR_RNDU);
    mpfr_cosh(t.v, a.hi(), MPFR_RNDU);
    mpfr_max(hi_of(r), hi_of(r), t.v, MPFR_RNDU);
    return r;
  }
  if (a.certainly_positive()) {
    mpfr_cosh(lo_of(r), a.lo(), MPFR_RNDD);
    mpfr_cosh(hi_of(r), a.hi(), MPFR_RNDU);
  } else {
    mpfr_cosh(lo_of(r), a.hi(), MPFR_RNDD);
    mpfr_cosh(hi_of(r), a.lo(), MPFR_RNDU);
  }
  return r;
}

namespace {

// f(lo) +- (hi - lo), clamped to [-1, 1]; valid for 1-Lipschitz f bounded by 1.
Interval lipschitz_trig(const Interval& a, UnaryFn fn) {
  const Bits p = a.precision();
  Interval r(p);
  Float rad(p);
  mpfr_sub(rad.v, a.hi(), a.lo(), MPFR_RNDU);
  fn(lo_of(r), a.lo(), MPFR_RNDD);
  fn(hi_of(r), a.lo(), MPFR_RNDU);
  mpfr_sub(lo_of(r), lo_of(r), rad.v, MPFR_RNDD);
  mpfr_add(hi_of(r), hi_of(r), rad.v, MPFR_RNDU);
  if (mpfr_cmp_si(lo_of(r), -1) < 0) mpfr_set_si(lo_of(r), -1, MPFR_RNDD);
  if (mpfr_cmp_si(hi_of(r), 1) > 0) mpfr_set_si(hi_of(r), 1, MPFR_RNDU);
  return r;
}

}  // namespace

Interval cos(const Interval& a) { return lipschitz_trig(a, mpfr_cos); }
Interval sin(const Interval& a) { return lipschitz_trig(a, mpfr_sin); }

Interval abs(const Interval& a) {
  if (mpfr_sgn(a.lo()) >= 0) return a;
  if (mpfr_sgn(a.hi()) <= 0) return -a;
  Interval r(a.precision());
  mpfr_set_zero(lo_of(r), 1);
  mpfr_neg(hi_of(r), a.lo(), MPFR_RNDU);
  mpfr_max(hi_of(r), hi_of(r), a.hi(), MPFR_RNDU);
  return r;
}

Interval square(const Interval& a) { return pow(a, 2); }

Interval pow(const Interval& a, long k) {
  if (k == 0) return Interval::exact(1, a.precision());
  if (k < 0) return 1 / pow(a, -k);
  Interval r(a.precision());
  if (mpfr_sgn(a.lo()) >= 0) {
    mpfr_pow_si(lo_of(r), a.lo(), k, MPFR_RNDD);
    mpfr_pow_si(hi_of(r), a.hi(), k, MPFR_RNDU);
    return r;
  }
  if (mpfr_sgn(a.hi()) <= 0) {
    Interval m = pow(-a, k);
    return (k % 2 == 0) ? m : -m;
  }
  // Straddles zero.
  if (k % 2 == 1) {
    mpfr_pow_si(lo_of(r), a.lo(), k, MPFR_RNDD);
    mpfr_pow_si(hi_of(r), a.hi(), k, MPFR_RNDU);
    return r;
  }
  Interval m = abs(a);
  mpfr_set_zero(lo_of(r), 1);
  mpfr_pow_si(hi_of(r), m.hi(), k, MPFR_RNDU);
  return r;
}

Interval hull(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_min(lo_of(r), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(hi_of(r), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

bool certainly_less(const Interval& a, const Interval& b) { return mpfr_cmp(a.hi(), b.lo()) < 0; }

Interval sqrt_of(unsigned long n, Bits precision) {
  Interval r(precision);
  mpfr_sqrt_ui(lo_of(r), n, MPFR_RNDD);
  mpfr_sqrt_ui(hi_of(r), n, MPFR_RNDU);
  return r;
}

namespace {

struct FixedPoint {
  mpz_class value;  // scaled by 2^bits
  mpz_class error;  // |true - value| <= error, same scale
};

// atan(1/x) in fixed point. p_k = floor(2^bits / x^(2k+1)) is exact by the
// nested-floor identity, so each term floor(p_k / (2k+1)) is off by < 2 units.
// The alternating tail after the last nonzero p_k is < 1 unit.
FixedPoint atan_inverse(unsigned long x, unsigned long bits) {
  mpz_class power = 1;
  power <<= bits;
  power /= x;
  const unsigned long x2 = x * x;
  FixedPoint out{0, 0};
  for (unsigned long k = 0; power != 0; ++k) {
    mpz_class term = power / (2 * k + 1);
    if (k % 2 == 0) {
      out.value += term;
    } else {
      out.value -= term;
    }
    out.error += 2;
    power /= x2;
  }
  out.error += 1;
  return out;
}

Interval compute_pi(Bits precision) {
  const unsigned long bits = static_cast<unsigned long>(precision) + 64;
  FixedPoint a5 = atan_inverse(5, bits);
  FixedPoint a239 = atan_inverse(239, bits);
  mpz_class centre = 16 * a5.value - 4 * a239.value;
  mpz_class err = 16 * a5.error + 4 * a239.error;
  mpz_class lo = centre - err;
  mpz_class hi = centre + err;
  Float flo(precision);
  Float fhi(precision);
  mpfr_set_z(flo.v, lo.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(fhi.v, hi.get_mpz_t(), MPFR_RNDU);
  mpfr_div_2ui(flo.v, flo.v, bits, MPFR_RNDD);
  mpfr_div_2ui(fhi.v, fhi.v, bits, MPFR_RNDU);
  return Interval::from_bounds(flo.v, fhi.v, precision);
}

}  // namespace

Interval enclose_pi(Bits precision) {
  precision = std::max(precision, kMinPrecision);
  static std::mutex mutex;
  static std::map<Bits, Interval> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(precision);
    if (it != cache.end()) return it->second;
  }
  Interval pi = compute_pi(precision);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(precision, std::move(pi)).first->second;
}

}  // namespace opf::arith
