#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace opf::exact {

/// Exact overpartition counts p(0..max_n).
///
/// Built from the identity (sum p(n) q^n) * (sum_k (-1)^k q^{k^2}) = 1, i.e.
///   p(n) = 2 * sum_{j>=1, j^2<=n} (-1)^{j+1} p(n - j^2).
/// Immutable once constructed; safe to share read-only across threads.
class OverpartitionTable {
 public:
  OverpartitionTable() : values_{mpz_class(1)} {}
  explicit OverpartitionTable(std::vector<mpz_class> values);

  std::size_t max_n() const { return values_.size() - 1; }
  const mpz_class& operator[](std::size_t n) const { return values_.at(n); }
  const std::vector<mpz_class>& values() const { return values_; }

  /// Returns a table covering 0..new_max_n, reusing the stored prefix.
  OverpartitionTable extended(std::size_t new_max_n) const;

 private:
  std::vector<mpz_class> values_;
};

OverpartitionTable build_table(std::size_t max_n);

/// Right-hand side of the recurrence at n, computed from entries below n.
mpz_class recurrence_value(const std::vector<mpz_class>& values, std::size_t n);

/// Index of the first entry in [from, to] that disagrees with the recurrence.
std::optional<std::size_t> first_recurrence_violation(const std::vector<mpz_class>& values,
                                                      std::size_t from, std::size_t to);

/// Direct enumeration: sum over partitions of n of 2^(distinct parts). Rejects n > 30.
mpz_class enumerate_overpartitions(unsigned n);

/// u_n = p(n-1) p(n+1) / p(n)^2, exact and in lowest terms. Requires 1 <= n <= max_n - 1.
mpq_class u_ratio(const OverpartitionTable& table, std::size_t n);

/// p(n+1) / p(n).
mpq_class forward_ratio(const OverpartitionTable& table, std::size_t n);

/// A finite window of an integer sequence; entries[i] is the term at index offset + i.
struct LSequence {
  long offset = 0;
  std::vector<mpz_class> entries;

  long last_index() const { return offset + static_cast<long>(entries.size()) - 1; }
  const mpz_class& at(long index) const { return entries.at(static_cast<std::size_t>(index - offset)); }
};

LSequence table_sequence(const OverpartitionTable& table);

/// b_i = a_{i+1}^2 - a_i a_{i+2}; the result is indexed by the centre term,
/// so an entry at index n reads "log-concavity at n".
LSequence apply_L(const LSequence& seq);

/// The k-th iterate of apply_L on the table.
LSequence iterate_L(const OverpartitionTable& table, unsigned k);

struct LevelThreshold {
  unsigned level = 0;
  /// Least index from which every computed entry is > 0; nullopt when the last entry is not.
  std::optional<long> strict;
  /// Least index from which every computed entry is >= 0.
  std::optional<long> nonnegative;
  long first_index = 0;
  long last_index = 0;
};

/// For k = 1..r, where the computed part of L^k(p) becomes (and stays) positive.
std::vector<LevelThreshold> r_log_concavity_scan(const OverpartitionTable& table, unsigned r);

}  // namespace opf::exact
