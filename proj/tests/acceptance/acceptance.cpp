// Acceptance suite. Prints one PASS/FAIL line per criterion item.
//   opf_acceptance                 all criteria
//   opf_acceptance --criterion 4   only criterion 4
#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "opf/asym_bounds.hpp"
#include "opf/exact_core.hpp"
#include "opf/rademacher.hpp"
#include "opf/verifier.hpp"

using namespace opf;
using verify::Outcome;
using verify::StatementId;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void line(bool ok, const std::string& id, const std::string& what, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " [" << id << "] " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

std::string join(const std::vector<unsigned long>& v, std::size_t limit = 10) {
  std::string s;
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) s += (i ? "," : "") + std::to_string(v[i]);
  if (v.size() > limit) s += ",...";
  return s;
}

std::string counts_detail(const verify::VerificationReport& r, double secs) {
  std::ostringstream s;
  s << "holds=" << r.counts.holds << " equality=" << r.counts.equality << " fails=" << r.counts.fails
    << " unknown=" << r.counts.unknown;
  if (r.counts.fails) s << " fails at n=" << join(r.indices_with(Outcome::Fails));
  if (r.counts.unknown) s << " unknown at n=" << join(r.indices_with(Outcome::Unknown));
  s.precision(3);
  s << " " << std::fixed << secs << "s";
  return s.str();
}

const exact::OverpartitionTable& table() {
  static const auto t = exact::build_table(10002);
  return t;
}

void range_line(const std::string& id, StatementId statement, unsigned long from, unsigned long to,
                const std::string& what, unsigned m = 2) {
  const auto t0 = Clock::now();
  const auto r = verify::verify_range({statement, m}, table(), from, to);
  line(r.counts.all_hold(), id, what, counts_detail(r, seconds_since(t0)));
}

void criterion1() {
  const auto t0 = Clock::now();
  const auto t = exact::build_table(25);
  bool ok = true;
  for (unsigned n = 0; n <= 25; ++n) ok = ok && t[n] == exact::enumerate_overpartitions(n);
  const long first[] = {1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232};
  for (std::size_t n = 0; n < 11; ++n) ok = ok && t[n] == first[n];
  const double secs = seconds_since(t0);
  line(ok && secs < 1.0, "1", "table equals brute-force enumeration for n <= 25 in under 1 s",
       std::to_string(secs) + "s");
}

long peak_rss_kib() {
  rusage u{};
  getrusage(RUSAGE_SELF, &u);
  return u.ru_maxrss;
}

void criterion2() {
  const long before = peak_rss_kib();
  const auto t0 = Clock::now();
  const auto t = exact::build_table(50000);
  const double secs = seconds_since(t0);
  std::size_t limb_bytes = 0;
  for (const auto& v : t.values()) limb_bytes += mpz_size(v.get_mpz_t()) * sizeof(mp_limb_t) + sizeof(mpz_class);
  const long grown_kib = peak_rss_kib() - before;
  // Stored integers plus allocator slack; no quadratic working set.
  const bool memory_ok = static_cast<double>(grown_kib) * 1024.0 <= 2.0 * static_cast<double>(limb_bytes) + 64e6;
  std::ostringstream d;
  d << secs << "s, stored " << limb_bytes / 1024 << " KiB, peak growth " << grown_kib << " KiB";
  line(secs < 60.0 && memory_ok && t.max_n() == 50000, "2", "build_table(50000) under 60 s, memory ~ stored values",
       d.str());
}

void criterion3() {
  auto t0 = Clock::now();
  std::vector<unsigned long> missed;
  for (unsigned long n = 1; n <= 2000; ++n) {
    if (!rademacher::estimate(n, 3, 128).enclosure.contains(table()[n])) missed.push_back(n);
  }
  line(missed.empty(), "3a", "estimate(n, 3) encloses p(n) for 1 <= n <= 2000",
       std::to_string(missed.size()) + " misses " + join(missed) + ", " + std::to_string(seconds_since(t0)) + "s");

  t0 = Clock::now();
  std::vector<unsigned long> split;
  std::vector<unsigned long> split_without_k3;
  for (unsigned long n = 1; n <= 2000; ++n) {
    const auto bound = rademacher::residual_split_bound(n, 256);
    const auto diff = arith::Interval::exact(table()[n], 256) - rademacher::main_term(n, 256);
    if (!certainly_less(arith::abs(diff), bound)) split.push_back(n);
    // Same bound once the k = 3 term of the series is taken out.
    if (!certainly_less(arith::abs(diff - rademacher::k_term(n, 3, 256).re), bound)) split_without_k3.push_back(n);
  }
  std::ostringstream d;
  d << split.size() << " violations";
  if (!split.empty()) d << " (first " << split.front() << ", last " << split.back() << ")";
  d << "; with the k=3 term removed: " << split_without_k3.size() << " violations, " << seconds_since(t0) << "s";
  line(split.empty(), "3b", "|p(n) - T(n)| <= (1/8n)(1+1/mu)e^{-mu} + R2(n,3) for 1 <= n <= 2000", d.str());
}

void criterion4() {
  {
    const auto t0 = Clock::now();
    const auto r = verify::verify_range({StatementId::cor1}, table(), 4, 10000);
    const auto small = verify::verify_range({StatementId::cor1}, table(), 1, 3);
    const bool eq = small.indices_with(Outcome::Equality) == std::vector<unsigned long>{1, 2};
    line(r.counts.all_hold() && eq, "4a", "log-concavity on 4..10000 with Equality at n = 1, 2",
         counts_detail(r, seconds_since(t0)) + " equalities at n=" + join(small.indices_with(Outcome::Equality)));
  }
  range_line("4b", StatementId::cor2, 2, 2000, "cor2 on 2..2000");
  range_line("4c", StatementId::cor3, 42, 5000, "2-log-concavity (exact) on 42..5000");
  range_line("4d", StatementId::cor4, 52, 2000, "cor4 on 52..2000");
  range_line("4e", StatementId::cor5, 16, 5000, "higher-order Turan (exact) on 16..5000");
  range_line("4f", StatementId::cor6, 2, 4500, "cor6 on 2..4500");
  range_line("4g", StatementId::thm1, 37, 2000, "thm1 window on 37..2000");
  range_line("4h", StatementId::thm2, 27, 2000, "thm2 window on 27..2000");
  range_line("4i", StatementId::thm3, 2, 2000, "thm3 window on 2..2000");
}

void criterion5() {
  const exact::OverpartitionTable none;
  const char* ids[] = {"5a", "5b", "5c", "5d", "5e", "5f"};
  std::size_t i = 0;
  for (StatementId id : verify::bridge_statements()) {
    const auto& info = verify::info(id);
    const auto t0 = Clock::now();
    const auto r = verify::verify_range({id}, none, info.stated_from, info.stated_from + 499);
    line(r.counts.all_hold(), ids[i++],
         std::string(info.key) + " holds on " + std::to_string(info.stated_from) + ".." +
             std::to_string(info.stated_from + 499),
         counts_detail(r, seconds_since(t0)));
  }
  for (StatementId id : {StatementId::bridge_t_upper, StatementId::bridge_v_upper}) {
    const auto& info = verify::info(id);
    const auto rec = verify::certify_at({id}, none, info.stated_from - 1);
    line(rec.outcome == Outcome::Fails, id == StatementId::bridge_t_upper ? "5g" : "5h",
         std::string(info.key) + " fails at " + std::to_string(info.stated_from - 1),
         std::string("outcome=") + std::string(arith::to_string(rec.outcome)));
  }
}

void criterion6() {
  {
    std::mt19937_64 rng(20260101);
    std::size_t checked = 0;
    std::vector<std::string> bad;
    for (unsigned m : {2U, 3U, 4U}) {
      const unsigned long n1 = asym::n1_threshold(m).n1;
      std::uniform_int_distribution<unsigned long> pick(n1, 10000);
      for (int k = 0; k < 30; ++k) {
        const unsigned long n = k == 0 ? n1 : (k == 1 ? 10000 : pick(rng));
        ++checked;
        if (asym::y_bound_check(table(), n, m).outcome != Outcome::Holds) {
          bad.push_back("m=" + std::to_string(m) + ",n=" + std::to_string(n));
        }
      }
    }
    line(bad.empty(), "6a", "y-bound for m in {2,3,4} at 30 sampled n in [N1(m), 10000]",
         std::to_string(checked) + " checks, " + std::to_string(bad.size()) + " failures");
  }
  {
    std::vector<std::string> bad;
    for (unsigned long n : {50UL, 100UL, 200UL, 500UL}) {
      for (unsigned m : {2U, 4U, 8U}) {
        const auto b = asym::t_ratio_bounds(n, m, 256);
        const auto d = asym::direct_t_ratio(n, 256);
        if (!(certainly_less(b.lo, d) && certainly_less(d, b.hi))) {
          bad.push_back(std::to_string(n) + "/" + std::to_string(m));
        }
      }
    }
    line(bad.empty(), "6b", "T-ratio sandwich contains the direct ratio on {50,100,200,500} x {2,4,8}",
         bad.empty() ? "12 grid points" : "misses at " + bad.front());
  }
  range_line("6c", StatementId::t_ratio_window, 184, 2000, "T-ratio window (m=2) contains p(n+1)/p(n) on 184..2000");
  range_line("6d", StatementId::ratio_window, 67, 2000, "explicit order-4 ratio window on 67..2000");
}

void criterion7() {
  const auto base = exact::build_table(2000);
  const auto scan = exact::r_log_concavity_scan(base, 3);
  const auto show = [](const std::optional<long>& v) { return v ? std::to_string(*v) : std::string("none"); };
  line(scan[0].strict == 4, "7a", "level-1 threshold is 4", "computed " + show(scan[0].strict));
  line(scan[1].strict == 42, "7b", "level-2 threshold is 42", "computed " + show(scan[1].strict));
  const auto longer = exact::r_log_concavity_scan(base.extended(3000), 3);
  line(scan[2].strict.has_value() && scan[2].strict == longer[2].strict, "7c",
       "level-3 threshold stable when the table grows by 1000",
       "computed " + show(scan[2].strict) + " at N=2000, " + show(longer[2].strict) + " at N=3000");
  const auto probe = verify::asymptotic_probe(table(), 1000, 5000);
  std::ostringstream d;
  d << "value(1000)=" << probe.points.front().value.mid_double()
    << " value(5000)=" << probe.points.back().value.mid_double() << " drift=" << probe.drift;
  line(probe.band_ok, "7d", "(1-u_n)(4/pi)n^{3/2} in (0.9, 1.1) for 1000 <= n <= 5000", d.str());
}

void criterion8() {
  const std::vector<StatementId> pool = {
      StatementId::thm1, StatementId::thm2, StatementId::thm3, StatementId::cor2,
      StatementId::cor4, StatementId::cor6, StatementId::bridge_s_upper, StatementId::bridge_s_lower,
      StatementId::bridge_t_lower, StatementId::bridge_t_upper, StatementId::bridge_v_lower,
      StatementId::bridge_v_upper, StatementId::ratio_window, StatementId::t_ratio_window, StatementId::y_bound,
      StatementId::sandwich, StatementId::cor1, StatementId::cor3, StatementId::cor5};
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> which(0, pool.size() - 1);
  const arith::PrecisionPolicy normal{};
  const arith::PrecisionPolicy doubled{2 * normal.start, 2 * normal.cap};
  int flips = 0;
  int sampled = 0;
  int fails_seen = 0;
  while (sampled < 100) {
    const verify::Statement s{pool[which(rng)]};
    const unsigned long from = verify::domain_start(s);
    // Cover the region around each threshold, where verdicts change.
    const unsigned long centre = std::max(from, verify::info(s.id).stated_from);
    std::uniform_int_distribution<unsigned long> near(from, centre + 200);
    const unsigned long n = near(rng);
    try {
      const auto a = verify::certify_at(s, table(), n, normal);
      const auto b = verify::certify_at(s, table(), n, doubled);
      ++sampled;
      if (a.outcome == Outcome::Fails) ++fails_seen;
      const bool decided = a.outcome == Outcome::Holds || a.outcome == Outcome::Fails;
      if (decided && b.outcome != a.outcome) ++flips;
    } catch (const std::exception&) {
      // degenerate index; draw again
    }
  }
  line(flips == 0, "8", "doubling the precision never flips a Holds/Fails verdict (100 random pairs)",
       std::to_string(flips) + " flips, " + std::to_string(fails_seen) + " Fails verdicts sampled");
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  const std::vector<std::function<void()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                       criterion5, criterion6, criterion7, criterion8};
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::cerr << "usage: opf_acceptance [--criterion 1..8]\n";
    return 2;
  }
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only == 0 || only == static_cast<int>(i + 1)) criteria[i]();
  }
  return failures == 0 ? 0 : 1;
}
