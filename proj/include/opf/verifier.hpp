#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opf/certify.hpp"
#include "opf/exact_core.hpp"
#include "opf/named_bounds.hpp"

namespace opf::verify {

using arith::Certificate;
using arith::Outcome;
using arith::PrecisionPolicy;
using exact::OverpartitionTable;

enum class StatementId {
  thm1, thm2, thm3,
  cor1, cor2, cor3, cor4, cor5, cor6,
  bridge_s_upper, bridge_s_lower, bridge_t_lower, bridge_t_upper, bridge_v_lower, bridge_v_upper,
  ratio_window,   // explicit order-4 window, n > 66
  t_ratio_window,   // T-ratio window with parameter m, n >= N1(m)
  y_bound,        // |p/T - 1| bound with parameter m, n >= N1(m)
  sandwich,       // L+- < p(n+-1)/p(n) < U+-, n >= 184
};

struct Statement {
  StatementId id = StatementId::thm1;
  unsigned m = 2;  // only for t_ratio_window and y_bound
};

struct StatementInfo {
  StatementId id;
  std::string_view key;
  std::string_view description;
  /// Least n the published statement covers.
  unsigned long stated_from;
  /// Table margins: needs p(n - back) .. p(n + ahead).
  unsigned back;
  unsigned ahead;
  /// Decided purely in integer/rational arithmetic.
  bool exact;
};

const StatementInfo& info(StatementId id);
const std::vector<StatementId>& all_statements();
const std::vector<StatementId>& bridge_statements();
std::optional<StatementId> parse_statement(std::string_view key);

/// Least n at which the statement is well defined (after preconditions and degeneracies).
unsigned long domain_start(const Statement& statement);

/// Table size needed to evaluate the statement up to n.
std::size_t required_max_n(const Statement& statement, unsigned long n);

struct NRecord {
  unsigned long n = 0;
  Outcome outcome = Outcome::Unknown;
  arith::Bits precision_used = 0;
  double margin = 0.0;
};

/// Certifies the statement at a single n. Throws DegenerateError / PreconditionError.
NRecord certify_at(const Statement& statement, const OverpartitionTable& table, unsigned long n,
                   const PrecisionPolicy& policy = {});

struct OutcomeCounts {
  std::size_t holds = 0;
  std::size_t equality = 0;
  std::size_t fails = 0;
  std::size_t unknown = 0;

  std::size_t total() const { return holds + equality + fails + unknown; }
  bool all_hold() const { return equality == 0 && fails == 0 && unknown == 0; }
  friend bool operator==(const OutcomeCounts&, const OutcomeCounts&) = default;
};

struct VerificationReport {
  std::string statement;
  std::string description;
  unsigned m = 0;  // 0 unless the statement is parametrised
  unsigned long from = 0;
  unsigned long to = 0;
  PrecisionPolicy policy;
  std::vector<NRecord> records;  // ordered by n, one per n in [from, to]
  OutcomeCounts counts;
  arith::Bits max_precision_used = 0;
  double wall_seconds = 0.0;

  const NRecord& at(unsigned long n) const { return records.at(n - from); }
  std::vector<unsigned long> indices_with(Outcome outcome) const;
};

/// Checks table margins, preconditions and degeneracies over [from, to]; throws on the first problem.
void validate_range(const Statement& statement, const OverpartitionTable& table, unsigned long from,
                    unsigned long to);

/// OpenMP-parallel over n. Records are independent of thread scheduling.
VerificationReport verify_range(const Statement& statement, const OverpartitionTable& table,
                                unsigned long from, unsigned long to, const PrecisionPolicy& policy = {});

/// Sequential reference for verify_range.
VerificationReport verify_range_serial(const Statement& statement, const OverpartitionTable& table,
                                       unsigned long from, unsigned long to, const PrecisionPolicy& policy = {});

VerificationReport verify_theorem1(const OverpartitionTable& table, unsigned long from, unsigned long to,
                                   const PrecisionPolicy& policy = {});
VerificationReport verify_theorem2(const OverpartitionTable& table, unsigned long from, unsigned long to,
                                   const PrecisionPolicy& policy = {});
VerificationReport verify_theorem3(const OverpartitionTable& table, unsigned long from, unsigned long to,
                                   const PrecisionPolicy& policy = {});
/// id in 1..6
VerificationReport verify_corollary(int id, const OverpartitionTable& table, unsigned long from, unsigned long to,
                                    const PrecisionPolicy& policy = {});
/// One report per bridge inequality over [max(from, threshold), to]; bridges whose
/// threshold exceeds `to` are omitted.
std::vector<VerificationReport> bridge_lemmas(unsigned long from, unsigned long to, const PrecisionPolicy& policy = {});

struct SandwichResult {
  Certificate forward;   // L+(n) < p(n+1)/p(n) < U+(n)
  Certificate backward;  // L-(n) < p(n-1)/p(n) < U-(n)
  Certificate product;   // L+ L- < u_n < U+ U-
};

SandwichResult check_ratio_sandwich(const OverpartitionTable& table, unsigned long n,
                                    const PrecisionPolicy& policy = {});

struct ProbePoint {
  unsigned long n;
  arith::Interval value;  // (1 - u_n)(4/pi) n^{3/2}
};

struct ProbeReport {
  std::vector<ProbePoint> points;
  /// value(to) - value(from), midpoint estimate
  double drift = 0.0;
  /// Every point certified strictly inside (band_lo, band_hi).
  bool band_ok = true;
};

ProbeReport asymptotic_probe(const OverpartitionTable& table, unsigned long from, unsigned long to,
                             const mpq_class& band_lo = mpq_class(9, 10), const mpq_class& band_hi = mpq_class(11, 10),
                             arith::Bits precision = 128);

}  // namespace opf::verify
