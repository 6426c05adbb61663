// opf: overpartition table, series estimates and certified verification.
#include <omp.h>

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "opf/cli/cache.hpp"
#include "opf/cli/report.hpp"
#include "opf/errors.hpp"
#include "opf/rademacher.hpp"
#include "opf/verifier.hpp"

namespace {

constexpr int kExitUsage = 2;

struct Range {
  unsigned long from = 0;
  unsigned long to = 0;
};

std::optional<unsigned long> parse_ulong(std::string_view s) {
  unsigned long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw opf::PreconditionError("range must look like a..b, got '" + text + "'");
  auto a = parse_ulong(std::string_view(text).substr(0, dots));
  auto b = parse_ulong(std::string_view(text).substr(dots + 2));
  if (!a || !b) throw opf::PreconditionError("range bounds must be non-negative integers, got '" + text + "'");
  if (*a > *b) throw opf::PreconditionError("empty range '" + text + "'");
  return {*a, *b};
}

std::string integer_bracket(const opf::arith::Interval& x) {
  mpz_class lo;
  mpz_class hi;
  mpfr_get_z(lo.get_mpz_t(), x.lo(), MPFR_RNDD);
  mpfr_get_z(hi.get_mpz_t(), x.hi(), MPFR_RNDU);
  return "[" + lo.get_str() + ", " + hi.get_str() + "]";
}

int digits_for(opf::arith::Bits precision) { return static_cast<int>(precision * 0.30103) + 2; }

int run_compute(std::size_t max_n, const std::optional<std::string>& cache_dir) {
  const auto dir = opf::cli::resolve_cache_dir(cache_dir);
  const auto result = opf::cli::ensure_table(dir, max_n);
  std::cout << result.table[max_n].get_str() << "\n";
  return 0;
}

int run_estimate(unsigned long n, unsigned long terms, opf::arith::Bits precision,
                 const std::optional<std::string>& cache_dir) {
  if (n < 1) throw opf::PreconditionError("estimate needs n >= 1");
  if (terms == 0 || terms % 2 == 0) throw opf::PreconditionError("--terms must be odd");
  const auto est = opf::rademacher::estimate(n, terms, precision);
  const int digits = digits_for(precision);
  std::cout << "n: " << n << "\n";
  std::cout << "terms: " << terms << "\n";
  std::cout << "precision: " << precision << "\n";
  std::cout << "main sum: " << est.main_sum.to_string(digits) << "\n";
  std::cout << "error radius: " << est.error_radius.to_string(8) << "\n";
  std::cout << "enclosure: " << est.enclosure.to_string(digits) << "\n";
  std::cout << "integer bracket: " << integer_bracket(est.enclosure) << "\n";
  mpz_class rounded;
  if (opf::rademacher::rounds_uniquely(est, rounded)) std::cout << "unique integer: " << rounded.get_str() << "\n";
  // Read-only: a missing or short cache is not an error here.
  const auto file = opf::cli::cache_path(opf::cli::resolve_cache_dir(cache_dir));
  const auto cached = opf::cli::load_cache(file);
  if (cached && cached->max_n() >= n) {
    const mpz_class& exact = (*cached)[n];
    std::cout << "exact (cached): " << exact.get_str() << "\n";
    std::cout << "contains exact: " << (est.enclosure.contains(exact) ? "yes" : "NO") << "\n";
  }
  return 0;
}

struct VerifyOptions {
  std::string statement;
  std::string range;
  std::string format = "text";
  opf::arith::Bits precision = 128;
  opf::arith::Bits precision_cap = 4096;
  int jobs = 0;
  unsigned m = 2;
  std::string output;
  bool full = false;
};

int run_verify(const VerifyOptions& o, const std::optional<std::string>& cache_dir) {
  using namespace opf::verify;
  const Range range = parse_range(o.range);
  if (o.precision < opf::arith::kMinPrecision || o.precision_cap < o.precision) {
    throw opf::PreconditionError("need 16 <= --precision <= --precision-cap");
  }
  if (o.m < 1) throw opf::PreconditionError("--m must be >= 1");
  if (o.jobs > 0) omp_set_num_threads(o.jobs);
  const PrecisionPolicy policy{o.precision, o.precision_cap};

  std::vector<VerificationReport> reports;
  if (o.statement == "bridges") {
    reports = bridge_lemmas(range.from, range.to, policy);
    if (reports.empty()) throw opf::PreconditionError("no bridge threshold lies inside the range");
  } else {
    const auto id = parse_statement(o.statement);
    if (!id) throw opf::PreconditionError("unknown statement '" + o.statement + "'");
    const Statement statement{*id, o.m};
    const unsigned long start = domain_start(statement);
    if (range.from < start) {
      throw opf::PreconditionError(o.statement + " needs n >= " + std::to_string(start));
    }
    OverpartitionTable table;
    const std::size_t need = required_max_n(statement, range.to);
    if (need > 0) table = opf::cli::ensure_table(opf::cli::resolve_cache_dir(cache_dir), need).table;
    reports.push_back(verify_range(statement, table, range.from, range.to, policy));
  }
  const auto doc = opf::cli::make_document(o.statement, std::move(reports), o.full);

  std::string body;
  if (o.format == "json") {
    body = opf::cli::to_json(doc).dump(2) + "\n";
  } else if (o.format == "csv") {
    body = opf::cli::to_csv(doc);
  } else {
    body = opf::cli::to_text(doc);
  }
  if (o.output.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(o.output, std::ios::binary | std::ios::trunc);
    if (!out) throw opf::PreconditionError("cannot write " + o.output);
    out << body;
  }
  return opf::cli::exit_code(doc);
}

std::string statement_list() {
  std::string s;
  for (auto id : opf::verify::all_statements()) {
    const auto& i = opf::verify::info(id);
    if (i.key.rfind("bridge-", 0) == 0) continue;
    s += std::string(i.key) + ", ";
  }
  return s + "bridges";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Overpartition tables, Rademacher-type estimates and certified inequality checks.\n"
               "Exit codes: 0 all claims hold, 1 fails/equalities/unknowns present, 2 usage or input error."};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  std::optional<std::string> cache_dir;
  const std::string cache_help = "cache directory (overrides $OPF_CACHE_DIR; default ./.opf_cache)";

  auto* compute = app.add_subcommand("compute", "build or extend the cache and print p(N)");
  std::size_t max_n = 0;
  compute->add_option("--max-n", max_n, "largest index N")->required();
  compute->add_option("--cache-dir", cache_dir, cache_help);

  auto* estimate = app.add_subcommand("estimate", "truncated series enclosure for p(n)");
  unsigned long est_n = 0;
  unsigned long terms = 3;
  opf::arith::Bits est_precision = 128;
  estimate->add_option("n", est_n, "index n >= 1")->required();
  estimate->add_option("--terms", terms, "truncation N (odd)");
  estimate->add_option("--precision", est_precision, "working precision in bits");
  estimate->add_option("--cache-dir", cache_dir, cache_help);

  auto* verify = app.add_subcommand("verify", "certify a statement over a range of n");
  VerifyOptions vo;
  vo.jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  verify->add_option("statement", vo.statement, "one of: " + statement_list())->required();
  verify->add_option("--range", vo.range, "inclusive range a..b")->required();
  verify->add_option("--format", vo.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_option("--precision", vo.precision, "starting precision in bits");
  verify->add_option("--precision-cap", vo.precision_cap, "precision ceiling in bits");
  verify->add_option("--jobs", vo.jobs, "worker threads");
  verify->add_option("--m", vo.m, "parameter m for tratio-window and y-bound");
  verify->add_option("--output", vo.output, "write the report here instead of stdout");
  verify->add_flag("--full", vo.full, "list every n, not just the non-holding ones");
  verify->add_option("--cache-dir", cache_dir, cache_help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compute) return run_compute(max_n, cache_dir);
    if (*estimate) return run_estimate(est_n, terms, est_precision, cache_dir);
    return run_verify(vo, cache_dir);
  } catch (const opf::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const opf::DegenerateError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const opf::CacheError& e) {
    std::cerr << "cache error: " << e.what() << "\n";
  } catch (const opf::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}
