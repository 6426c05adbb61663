#include "opf/verifier.hpp"

#include <omp.h>

#include <chrono>
#include <exception>
#include <stdexcept>
#include <string>

#include "opf/asym_bounds.hpp"
#include "opf/errors.hpp"

namespace opf::verify {

using arith::Enclosure;
using arith::Interval;
using arith::Operand;
using arith::StrictInequality;
using exact::u_ratio;

namespace {

const std::vector<StatementInfo>& catalogue() {
  static const std::vector<StatementInfo> table = {
      {StatementId::thm1, "thm1", "s_n - 15/n^4 < u_n < s_n + 20/n^4", 37, 1, 1, false},
      {StatementId::thm2, "thm2",
       "t_n - 120/n^{5/2} < (1-u_n)^2 / (u_n^2 (1-u_{n-1})(1-u_{n+1})) < t_n + 120/n^{5/2}", 27, 2, 2, false},
      {StatementId::thm3, "thm3",
       "v_n - 120/n^{5/2} < 4(1-u_n)(1-u_{n+1}) / (1-u_n u_{n+1})^2 < v_n + 101/n^{5/2}", 2, 1, 2, false},
      {StatementId::cor1, "cor1", "p(n)^2 > p(n-1) p(n+1) (log-concavity)", 4, 1, 1, true},
      {StatementId::cor2, "cor2", "u_n (1 + pi/(4 n^{3/2})) > 1", 2, 1, 1, false},
      {StatementId::cor3, "cor3", "L^2(p) > 0 at n (2-log-concavity)", 42, 2, 2, true},
      {StatementId::cor4, "cor4", "u_n^2 (1-u_{n-1})(1-u_{n+1})(1 + pi/(2 n^{3/2})) > (1-u_n)^2", 52, 2, 2, false},
      {StatementId::cor5, "cor5", "4(1-u_n)(1-u_{n+1}) > (1-u_n u_{n+1})^2 (higher order Turan)", 16, 1, 2, true},
      {StatementId::cor6, "cor6", "(1-u_n u_{n+1})^2 (1 + pi/(4 n^{3/2})) > 4(1-u_n)(1-u_{n+1})", 2, 1, 2, false},
      {StatementId::bridge_s_upper, "bridge-s-upper", "s_n + 20/n^4 < 1", 5, 0, 0, false},
      {StatementId::bridge_s_lower, "bridge-s-lower", "(s_n - 15/n^4)(1 + pi/(4 n^{3/2})) > 1", 5, 0, 0, false},
      {StatementId::bridge_t_lower, "bridge-t-lower", "t_n - 120/n^{5/2} > 1", 99, 0, 0, false},
      {StatementId::bridge_t_upper, "bridge-t-upper", "t_n + 120/n^{5/2} < 1 + pi/(2 n^{3/2})", 1176, 0, 0, false},
      {StatementId::bridge_v_lower, "bridge-v-lower", "v_n - 120/n^{5/2} > 1", 180, 0, 0, false},
      {StatementId::bridge_v_upper, "bridge-v-upper", "v_n + 101/n^{5/2} < 1 + pi/(4 n^{3/2})", 4179, 0, 0, false},
      {StatementId::ratio_window, "ratio-window",
       "sum_{k<=4} a_k mu^-k - 160/mu^5 < p(n+1)/p(n) < sum_{k<=4} a_k mu^-k + 873/mu^5", 67, 0, 1, false},
      {StatementId::t_ratio_window, "tratio-window",
       "T(n+1)/T(n) (1 - 4 2^m mu^-m) < p(n+1)/p(n) < T(n+1)/T(n) (1 + 6 2^m mu^-m)", 184, 0, 1, false},
      {StatementId::y_bound, "y-bound", "|p(n)/T(n) - 1| < (3/2)^{m+1} mu^-m", 184, 0, 0, false},
      {StatementId::sandwich, "sandwich", "L+(n) < p(n+1)/p(n) < U+(n) and L-(n) < p(n-1)/p(n) < U-(n)", 184, 1, 1,
       false},
  };
  return table;
}

const MuLaurent& laurent(int which) {
  // 0: t - 120x^5, 1: t + 120x^5, 2: v - 120x^5, 3: v + 101x^5,
  // 4: 1 + (pi/4)x^3, 5: 1 + (pi/2)x^3, 6: (s - 15x^8)(1 + (pi/4)x^3)
  static const std::vector<MuLaurent> table = [] {
    const MuLaurent& t = named_bound(BoundName::t).factors.front();
    const MuLaurent& v = named_bound(BoundName::v).factors.front();
    const MuLaurent& l = named_bound(BoundName::L).factors.front();
    MuLaurent quarter = x_power(0) + pi_x_power(1, 3, mpq_class(1, 4));
    MuLaurent half = x_power(0) + pi_x_power(1, 3, mpq_class(1, 2));
    return std::vector<MuLaurent>{t - x_power(5, 120), t + x_power(5, 120), v - x_power(5, 120),
                                  v + x_power(5, 101), quarter, half, l * quarter};
  }();
  return table.at(static_cast<std::size_t>(which));
}

Enclosure laurent_at(int which, unsigned long n) {
  const MuLaurent* m = &laurent(which);
  return [m, n](arith::Bits p) { return m->evaluate(n, p); };
}

Enclosure bound_at(BoundName name, unsigned long n) {
  const NamedBound* b = &named_bound(name);
  return [b, n](arith::Bits p) { return b->evaluate(n, p); };
}

// exact * laurent(which)
Enclosure scaled_laurent(const mpq_class& factor, int which, unsigned long n) {
  const MuLaurent* m = &laurent(which);
  return [factor, m, n](arith::Bits p) { return Interval::exact(factor, p) * m->evaluate(n, p); };
}

Enclosure constant_one() {
  return [](arith::Bits p) { return Interval::exact(1, p); };
}

mpq_class q_of(const mpz_class& z) { return mpq_class(z); }

mpz_class lc(const OverpartitionTable& t, unsigned long n) { return t[n] * t[n] - t[n - 1] * t[n + 1]; }

mpq_class theorem2_middle(const OverpartitionTable& table, unsigned long n) {
  const mpq_class u = u_ratio(table, n);
  const mpq_class um = u_ratio(table, n - 1);
  const mpq_class up = u_ratio(table, n + 1);
  const mpq_class denominator = u * u * (1 - um) * (1 - up);
  if (denominator == 0) throw DegenerateError("1 - u vanishes near n = " + std::to_string(n));
  mpq_class r = (1 - u) * (1 - u) / denominator;
  r.canonicalize();
  return r;
}

mpq_class theorem3_middle(const OverpartitionTable& table, unsigned long n) {
  const mpq_class u = u_ratio(table, n);
  const mpq_class up = u_ratio(table, n + 1);
  const mpq_class d = 1 - u * up;
  if (d == 0) throw DegenerateError("1 - u_n u_{n+1} vanishes at n = " + std::to_string(n));
  mpq_class r = 4 * (1 - u) * (1 - up) / (d * d);
  r.canonicalize();
  return r;
}

std::vector<StrictInequality> generic_claims(StatementId id, const OverpartitionTable& table, unsigned long n) {
  switch (id) {
    case StatementId::thm1: {
      const mpq_class u = u_ratio(table, n);
      return {{bound_at(BoundName::L, n), u}, {u, bound_at(BoundName::U, n)}};
    }
    case StatementId::thm2: {
      const mpq_class mid = theorem2_middle(table, n);
      return {{laurent_at(0, n), mid}, {mid, laurent_at(1, n)}};
    }
    case StatementId::thm3: {
      const mpq_class mid = theorem3_middle(table, n);
      return {{laurent_at(2, n), mid}, {mid, laurent_at(3, n)}};
    }
    case StatementId::cor1:
      return {{q_of(table[n - 1] * table[n + 1]), q_of(table[n] * table[n])}};
    case StatementId::cor2:
      return {{mpq_class(1), scaled_laurent(u_ratio(table, n), 4, n)}};
    case StatementId::cor3: {
      const mpz_class b0 = lc(table, n - 1);
      const mpz_class b1 = lc(table, n);
      const mpz_class b2 = lc(table, n + 1);
      return {{mpq_class(0), q_of(b1 * b1 - b0 * b2)}};
    }
    case StatementId::cor4: {
      const mpq_class u = u_ratio(table, n);
      const mpq_class um = u_ratio(table, n - 1);
      const mpq_class up = u_ratio(table, n + 1);
      mpq_class lhs = (1 - u) * (1 - u);
      mpq_class factor = u * u * (1 - um) * (1 - up);
      lhs.canonicalize();
      factor.canonicalize();
      return {{lhs, scaled_laurent(factor, 5, n)}};
    }
    case StatementId::cor5: {
      const mpz_class& a0 = table[n - 1];
      const mpz_class& a1 = table[n];
      const mpz_class& a2 = table[n + 1];
      const mpz_class& a3 = table[n + 2];
      const mpz_class cross = a1 * a2 - a0 * a3;
      return {{q_of(cross * cross), q_of(4 * (a1 * a1 - a0 * a2) * (a2 * a2 - a1 * a3))}};
    }
    case StatementId::cor6: {
      const mpq_class u = u_ratio(table, n);
      const mpq_class up = u_ratio(table, n + 1);
      mpq_class lhs = 4 * (1 - u) * (1 - up);
      mpq_class d = 1 - u * up;
      mpq_class factor = d * d;
      lhs.canonicalize();
      factor.canonicalize();
      return {{lhs, scaled_laurent(factor, 4, n)}};
    }
    case StatementId::bridge_s_upper:
      return {{bound_at(BoundName::U, n), constant_one()}};
    case StatementId::bridge_s_lower:
      return {{constant_one(), laurent_at(6, n)}};
    case StatementId::bridge_t_lower:
      return {{constant_one(), laurent_at(0, n)}};
    case StatementId::bridge_t_upper:
      return {{laurent_at(1, n), laurent_at(5, n)}};
    case StatementId::bridge_v_lower:
      return {{constant_one(), laurent_at(2, n)}};
    case StatementId::bridge_v_upper:
      return {{laurent_at(3, n), laurent_at(4, n)}};
    default:
      throw std::logic_error("statement is not a generic claim set");
  }
}

bool uses_table(StatementId id) { return info(id).back + info(id).ahead > 0 || id == StatementId::y_bound; }

// Degeneracy is a property of the domain, not an outcome.
void check_degenerate(StatementId id, const OverpartitionTable& table, unsigned long n) {
  if (id == StatementId::thm2) {
    if (u_ratio(table, n - 1) == 1 || u_ratio(table, n + 1) == 1 || u_ratio(table, n) == 0) {
      throw DegenerateError("thm2 is undefined at n = " + std::to_string(n) + " (1 - u vanishes)");
    }
  } else if (id == StatementId::thm3) {
    if (u_ratio(table, n) * u_ratio(table, n + 1) == 1) {
      throw DegenerateError("thm3 is undefined at n = " + std::to_string(n) + " (1 - u_n u_{n+1} vanishes)");
    }
  }
}

// Indices below the domain start that are excluded only by a vanishing
// denominator report that, rather than a bare range error.
void check_early_degeneracy(StatementId id, const OverpartitionTable& table, unsigned long from, unsigned long to) {
  if (id != StatementId::thm2 && id != StatementId::thm3) return;
  const unsigned long first = id == StatementId::thm2 ? 2 : 1;
  for (unsigned long n = std::max(from, first); n <= to && n + 1 <= table.max_n(); ++n) check_degenerate(id, table, n);
}

}  // namespace

const StatementInfo& info(StatementId id) {
  for (const auto& s : catalogue()) {
    if (s.id == id) return s;
  }
  throw std::logic_error("unknown statement id");
}

const std::vector<StatementId>& all_statements() {
  static const std::vector<StatementId> ids = [] {
    std::vector<StatementId> v;
    for (const auto& s : catalogue()) v.push_back(s.id);
    return v;
  }();
  return ids;
}

const std::vector<StatementId>& bridge_statements() {
  static const std::vector<StatementId> ids = {StatementId::bridge_s_upper, StatementId::bridge_s_lower,
                                               StatementId::bridge_t_lower, StatementId::bridge_t_upper,
                                               StatementId::bridge_v_lower, StatementId::bridge_v_upper};
  return ids;
}

std::optional<StatementId> parse_statement(std::string_view key) {
  for (const auto& s : catalogue()) {
    if (s.key == key) return s.id;
  }
  return std::nullopt;
}

unsigned long domain_start(const Statement& statement) {
  switch (statement.id) {
    case StatementId::thm2: return 4;  // u_1 = u_2 = 1
    case StatementId::cor3:
    case StatementId::cor4: return 2;
    case StatementId::ratio_window: return asym::ratio_expansion_m4().valid_from;
    case StatementId::t_ratio_window:
    case StatementId::y_bound: return asym::n1_threshold(statement.m).n1;
    case StatementId::sandwich: return 184;
    default: return 1;
  }
}

std::size_t required_max_n(const Statement& statement, unsigned long n) {
  const StatementInfo& i = info(statement.id);
  return uses_table(statement.id) ? n + i.ahead : 0;
}

NRecord certify_at(const Statement& statement, const OverpartitionTable& table, unsigned long n,
                   const PrecisionPolicy& policy) {
  if (n < domain_start(statement)) {
    check_early_degeneracy(statement.id, table, n, n);
    throw PreconditionError(std::string(info(statement.id).key) + " is not defined at n = " + std::to_string(n));
  }
  if (required_max_n(statement, n) > table.max_n()) throw std::out_of_range("table too short for n");
  check_degenerate(statement.id, table, n);
  Certificate cert;
  switch (statement.id) {
    case StatementId::ratio_window: cert = asym::explicit_ratio_window(table, n, policy); break;
    case StatementId::t_ratio_window: cert = asym::certify_p_ratio_window(table, n, statement.m, policy); break;
    case StatementId::y_bound: cert = asym::y_bound_check(table, n, statement.m, policy); break;
    case StatementId::sandwich: {
      SandwichResult s = check_ratio_sandwich(table, n, policy);
      std::vector<arith::Verdict> parts = s.forward.parts;
      parts.insert(parts.end(), s.backward.parts.begin(), s.backward.parts.end());
      // Reassemble as a single conjunction.
      cert = s.forward;
      if (s.backward.outcome != Outcome::Holds && cert.outcome == Outcome::Holds) cert.outcome = s.backward.outcome;
      if (s.backward.outcome == Outcome::Fails) cert.outcome = Outcome::Fails;
      cert.precision_used = std::max(cert.precision_used, s.backward.precision_used);
      cert.margin = std::min(cert.margin, s.backward.margin);
      cert.parts = std::move(parts);
      break;
    }
    default: cert = arith::certify_strict(generic_claims(statement.id, table, n), policy); break;
  }
  return NRecord{n, cert.outcome, cert.precision_used, cert.margin};
}

std::vector<unsigned long> VerificationReport::indices_with(Outcome outcome) const {
  std::vector<unsigned long> out;
  for (const auto& r : records) {
    if (r.outcome == outcome) out.push_back(r.n);
  }
  return out;
}

void validate_range(const Statement& statement, const OverpartitionTable& table, unsigned long from,
                    unsigned long to) {
  const std::string key(info(statement.id).key);
  if (from > to) throw PreconditionError("empty range for " + key);
  const unsigned long start = domain_start(statement);
  if (from < start) {
    check_early_degeneracy(statement.id, table, from, std::min(to, start - 1));
    throw PreconditionError(key + " needs n >= " + std::to_string(start) + ", range starts at " +
                            std::to_string(from));
  }
  if (required_max_n(statement, to) > table.max_n()) {
    throw PreconditionError(key + " up to n = " + std::to_string(to) + " needs p(n) up to " +
                            std::to_string(required_max_n(statement, to)));
  }
  if (statement.id == StatementId::thm2 || statement.id == StatementId::thm3) {
    for (unsigned long n = from; n <= to; ++n) check_degenerate(statement.id, table, n);
  }
}

namespace {

VerificationReport make_report(const Statement& statement, unsigned long from, unsigned long to,
                               const PrecisionPolicy& policy) {
  VerificationReport r;
  r.statement = std::string(info(statement.id).key);
  r.description = std::string(info(statement.id).description);
  if (statement.id == StatementId::t_ratio_window || statement.id == StatementId::y_bound) r.m = statement.m;
  r.from = from;
  r.to = to;
  r.policy = policy;
  return r;
}

void finish_report(VerificationReport& r) {
  for (const auto& rec : r.records) {
    switch (rec.outcome) {
      case Outcome::Holds: ++r.counts.holds; break;
      case Outcome::Equality: ++r.counts.equality; break;
      case Outcome::Fails: ++r.counts.fails; break;
      case Outcome::Unknown: ++r.counts.unknown; break;
    }
    r.max_precision_used = std::max(r.max_precision_used, rec.precision_used);
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

VerificationReport verify_range(const Statement& statement, const OverpartitionTable& table, unsigned long from,
                                unsigned long to, const PrecisionPolicy& policy) {
  validate_range(statement, table, from, to);
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport report = make_report(statement, from, to, policy);
  const long count = static_cast<long>(to - from + 1);
  report.records.resize(static_cast<std::size_t>(count));
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < count; ++i) {
    try {
      report.records[static_cast<std::size_t>(i)] = certify_at(statement, table, from + static_cast<unsigned long>(i), policy);
    } catch (...) {
#pragma omp critical(opf_verify_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  finish_report(report);
  report.wall_seconds = seconds_since(t0);
  return report;
}

VerificationReport verify_range_serial(const Statement& statement, const OverpartitionTable& table,
                                       unsigned long from, unsigned long to, const PrecisionPolicy& policy) {
  validate_range(statement, table, from, to);
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport report = make_report(statement, from, to, policy);
  report.records.reserve(to - from + 1);
  for (unsigned long n = from; n <= to; ++n) report.records.push_back(certify_at(statement, table, n, policy));
  finish_report(report);
  report.wall_seconds = seconds_since(t0);
  return report;
}

VerificationReport verify_theorem1(const OverpartitionTable& table, unsigned long from, unsigned long to,
                                   const PrecisionPolicy& policy) {
  return verify_range({StatementId::thm1}, table, from, to, policy);
}

VerificationReport verify_theorem2(const OverpartitionTable& table, unsigned long from, unsigned long to,
                                   const PrecisionPolicy& policy) {
  return verify_range({StatementId::thm2}, table, from, to, policy);
}

VerificationReport verify_theorem3(const OverpartitionTable& table, unsigned long from, unsigned long to,
                                   const PrecisionPolicy& policy) {
  return verify_range({StatementId::thm3}, table, from, to, policy);
}

VerificationReport verify_corollary(int id, const OverpartitionTable& table, unsigned long from, unsigned long to,
                                    const PrecisionPolicy& policy) {
  static const StatementId ids[] = {StatementId::cor1, StatementId::cor2, StatementId::cor3,
                                    StatementId::cor4, StatementId::cor5, StatementId::cor6};
  if (id < 1 || id > 6) throw PreconditionError("corollary id must be in 1..6");
  return verify_range({ids[id - 1]}, table, from, to, policy);
}

std::vector<VerificationReport> bridge_lemmas(unsigned long from, unsigned long to, const PrecisionPolicy& policy) {
  const OverpartitionTable empty;
  std::vector<VerificationReport> out;
  for (StatementId id : bridge_statements()) {
    const unsigned long start = std::max(from, info(id).stated_from);
    if (start > to) continue;
    out.push_back(verify_range({id}, empty, start, to, policy));
  }
  return out;
}

SandwichResult check_ratio_sandwich(const OverpartitionTable& table, unsigned long n, const PrecisionPolicy& policy) {
  if (n < 184) throw PreconditionError("ratio sandwich is stated for n >= 184");
  const mpq_class forward = exact::forward_ratio(table, n);
  mpq_class backward(table[n - 1], table[n]);
  backward.canonicalize();
  const mpq_class u = u_ratio(table, n);
  const NamedBound* lp = &named_bound(BoundName::L_plus);
  const NamedBound* up = &named_bound(BoundName::U_plus);
  const NamedBound* lm = &named_bound(BoundName::L_minus);
  const NamedBound* um = &named_bound(BoundName::U_minus);
  Enclosure lower_product = [lp, lm, n](arith::Bits p) { return lp->evaluate(n, p) * lm->evaluate(n, p); };
  Enclosure upper_product = [up, um, n](arith::Bits p) { return up->evaluate(n, p) * um->evaluate(n, p); };
  SandwichResult r;
  r.forward = arith::certify_strict(
      {{bound_at(BoundName::L_plus, n), forward}, {forward, bound_at(BoundName::U_plus, n)}}, policy);
  r.backward = arith::certify_strict(
      {{bound_at(BoundName::L_minus, n), backward}, {backward, bound_at(BoundName::U_minus, n)}}, policy);
  r.product = arith::certify_strict({{lower_product, u}, {u, upper_product}}, policy);
  return r;
}

ProbeReport asymptotic_probe(const OverpartitionTable& table, unsigned long from, unsigned long to,
                             const mpq_class& band_lo, const mpq_class& band_hi, arith::Bits precision) {
  if (from < 1 || from > to || to + 1 > table.max_n()) throw PreconditionError("probe range outside table");
  ProbeReport report;
  const Interval pi = arith::enclose_pi(precision);
  const Interval lo_band = Interval::exact(band_lo, precision);
  const Interval hi_band = Interval::exact(band_hi, precision);
  for (unsigned long n = from; n <= to; ++n) {
    const Interval one_minus_u = Interval::exact(mpq_class(1 - u_ratio(table, n)), precision);
    const Interval root = arith::sqrt_of(n, precision);
    Interval value = one_minus_u * 4L / pi * root * static_cast<long>(n);
    if (!(certainly_less(lo_band, value) && certainly_less(value, hi_band))) report.band_ok = false;
    report.points.push_back(ProbePoint{n, std::move(value)});
  }
  report.drift = report.points.back().value.mid_double() - report.points.front().value.mid_double();
  return report;
}

}  // namespace opf::verify
