#include "opf/exact_core.hpp"

#include <stdexcept>
#include <string>

#include "opf/errors.hpp"

namespace opf::exact {

OverpartitionTable::OverpartitionTable(std::vector<mpz_class> values) : values_(std::move(values)) {
  if (values_.empty() || values_[0] != 1) {
    throw PreconditionError("overpartition table must start with p(0) = 1");
  }
}

mpz_class recurrence_value(const std::vector<mpz_class>& values, std::size_t n) {
  mpz_class acc = 0;
  for (std::size_t j = 1; j * j <= n; ++j) {
    if (j % 2 == 1) {
      acc += values[n - j * j];
    } else {
      acc -= values[n - j * j];
    }
  }
  return 2 * acc;
}

std::optional<std::size_t> first_recurrence_violation(const std::vector<mpz_class>& values,
                                                      std::size_t from, std::size_t to) {
  if (!values.empty() && from == 0) {
    if (values[0] != 1) return 0;
    from = 1;
  }
  for (std::size_t n = from; n <= to && n < values.size(); ++n) {
    if (recurrence_value(values, n) != values[n]) return n;
  }
  return std::nullopt;
}

OverpartitionTable OverpartitionTable::extended(std::size_t new_max_n) const {
  if (new_max_n <= max_n()) return *this;
  std::vector<mpz_class> values;
  values.reserve(new_max_n + 1);
  values = values_;
  for (std::size_t n = values.size(); n <= new_max_n; ++n) {
    values.push_back(recurrence_value(values, n));
  }
  return OverpartitionTable(std::move(values));
}

OverpartitionTable build_table(std::size_t max_n) { return OverpartitionTable().extended(max_n); }

namespace {

// Weighted count of partitions of n into parts <= max_part, weight 2 per distinct part.
mpz_class enumerate_rec(unsigned n, unsigned max_part) {
  if (n == 0) return 1;
  mpz_class total = 0;
  for (unsigned part = std::min(n, max_part); part >= 1; --part) {
    for (unsigned used = part; used <= n; used += part) {
      total += 2 * enumerate_rec(n - used, part - 1);
    }
  }
  return total;
}

void require_index(const OverpartitionTable& table, std::size_t lo, std::size_t hi) {
  if (hi > table.max_n() || lo > hi) {
    throw std::out_of_range("index range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                            "] outside table 0.." + std::to_string(table.max_n()));
  }
}

}  // namespace

mpz_class enumerate_overpartitions(unsigned n) {
  if (n > 30) throw PreconditionError("enumerate_overpartitions is limited to n <= 30");
  return enumerate_rec(n, n);
}

mpq_class u_ratio(const OverpartitionTable& table, std::size_t n) {
  if (n == 0) throw std::out_of_range("u_ratio needs n >= 1");
  require_index(table, n - 1, n + 1);
  mpq_class q(table[n - 1] * table[n + 1], table[n] * table[n]);
  q.canonicalize();
  return q;
}

mpq_class forward_ratio(const OverpartitionTable& table, std::size_t n) {
  require_index(table, n, n + 1);
  mpq_class q(table[n + 1], table[n]);
  q.canonicalize();
  return q;
}

LSequence table_sequence(const OverpartitionTable& table) { return LSequence{0, table.values()}; }

LSequence apply_L(const LSequence& seq) {
  if (seq.entries.size() < 3) throw PreconditionError("apply_L needs at least 3 entries");
  LSequence out;
  out.offset = seq.offset + 1;
  out.entries.resize(seq.entries.size() - 2);
  const auto& a = seq.entries;
  for (std::size_t i = 0; i + 2 < a.size(); ++i) {
    out.entries[i] = a[i + 1] * a[i + 1] - a[i] * a[i + 2];
  }
  return out;
}

LSequence iterate_L(const OverpartitionTable& table, unsigned k) {
  LSequence seq = table_sequence(table);
  for (unsigned i = 0; i < k; ++i) seq = apply_L(seq);
  return seq;
}

std::vector<LevelThreshold> r_log_concavity_scan(const OverpartitionTable& table, unsigned r) {
  if (r == 0) throw PreconditionError("r_log_concavity_scan needs r >= 1");
  if (table.max_n() + 1 < 2 * static_cast<std::size_t>(r) + 1) {
    throw PreconditionError("table too short for L^" + std::to_string(r));
  }
  std::vector<LevelThreshold> out;
  LSequence seq = table_sequence(table);
  for (unsigned level = 1; level <= r; ++level) {
    seq = apply_L(seq);
    LevelThreshold t;
    t.level = level;
    t.first_index = seq.offset;
    t.last_index = seq.last_index();
    // Scan from the end for the last entry failing each condition.
    long strict_from = seq.offset;
    long nonneg_from = seq.offset;
    bool strict_found = false;
    bool nonneg_found = false;
    for (long idx = t.last_index; idx >= seq.offset; --idx) {
      const int s = sgn(seq.at(idx));
      if (!strict_found && s <= 0) {
        strict_from = idx + 1;
        strict_found = true;
      }
      if (!nonneg_found && s < 0) {
        nonneg_from = idx + 1;
        nonneg_found = true;
      }
      if (strict_found && nonneg_found) break;
    }
    if (strict_from <= t.last_index) t.strict = strict_from;
    if (nonneg_from <= t.last_index) t.nonnegative = nonneg_from;
    out.push_back(t);
  }
  return out;
}

}  // namespace opf::exact
