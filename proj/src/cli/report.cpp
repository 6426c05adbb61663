#include "opf/cli/report.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "opf/errors.hpp"

#ifndef OPF_VERSION
#define OPF_VERSION "0.0.0"
#endif

namespace opf::cli {

using nlohmann::json;
using verify::NRecord;
using verify::VerificationReport;

std::string_view tool_version() { return OPF_VERSION; }

arith::Outcome parse_outcome(std::string_view text) {
  for (auto o : {arith::Outcome::Holds, arith::Outcome::Equality, arith::Outcome::Fails, arith::Outcome::Unknown}) {
    if (arith::to_string(o) == text) return o;
  }
  throw PreconditionError("unknown outcome '" + std::string(text) + "'");
}

ReportDocument make_document(std::string command, std::vector<VerificationReport> reports, bool full) {
  ReportDocument doc;
  doc.tool_version = std::string(tool_version());
  doc.command = std::move(command);
  doc.full = full;
  if (!full) {
    for (auto& r : reports) {
      std::erase_if(r.records, [](const NRecord& rec) { return rec.outcome == arith::Outcome::Holds; });
    }
  }
  doc.reports = std::move(reports);
  return doc;
}

namespace {

json margin_json(double m) { return std::isfinite(m) ? json(m) : json(nullptr); }

double margin_of(const json& j) { return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>(); }

json report_json(const VerificationReport& r) {
  json records = json::array();
  for (const auto& rec : r.records) {
    records.push_back({{"n", rec.n},
                       {"outcome", arith::to_string(rec.outcome)},
                       {"precision_used", rec.precision_used},
                       {"margin", margin_json(rec.margin)}});
  }
  return {{"statement", r.statement},
          {"description", r.description},
          {"m", r.m},
          {"range", {{"from", r.from}, {"to", r.to}}},
          {"precision", {{"start", r.policy.start}, {"cap", r.policy.cap}, {"max_used", r.max_precision_used}}},
          {"counts",
           {{"holds", r.counts.holds},
            {"equality", r.counts.equality},
            {"fails", r.counts.fails},
            {"unknown", r.counts.unknown}}},
          {"records", records}};
}

VerificationReport report_from(const json& j) {
  VerificationReport r;
  r.statement = j.at("statement").get<std::string>();
  r.description = j.at("description").get<std::string>();
  r.m = j.at("m").get<unsigned>();
  r.from = j.at("range").at("from").get<unsigned long>();
  r.to = j.at("range").at("to").get<unsigned long>();
  const json& p = j.at("precision");
  r.policy.start = p.at("start").get<arith::Bits>();
  r.policy.cap = p.at("cap").get<arith::Bits>();
  r.max_precision_used = p.at("max_used").get<arith::Bits>();
  const json& c = j.at("counts");
  r.counts.holds = c.at("holds").get<std::size_t>();
  r.counts.equality = c.at("equality").get<std::size_t>();
  r.counts.fails = c.at("fails").get<std::size_t>();
  r.counts.unknown = c.at("unknown").get<std::size_t>();
  for (const json& rec : j.at("records")) {
    r.records.push_back(NRecord{rec.at("n").get<unsigned long>(), parse_outcome(rec.at("outcome").get<std::string>()),
                                rec.at("precision_used").get<arith::Bits>(), margin_of(rec.at("margin"))});
  }
  return r;
}

std::string list_indices(const VerificationReport& r, arith::Outcome o) {
  std::string out;
  std::size_t shown = 0;
  for (const auto& rec : r.records) {
    if (rec.outcome != o) continue;
    if (shown == 20) {
      out += " ...";
      break;
    }
    out += (shown++ == 0 ? "" : ",") + std::to_string(rec.n);
  }
  return out;
}

}  // namespace

json to_json(const ReportDocument& doc) {
  json reports = json::array();
  for (const auto& r : doc.reports) reports.push_back(report_json(r));
  return {{"schema_version", doc.schema_version},
          {"tool_version", doc.tool_version},
          {"command", doc.command},
          {"full", doc.full},
          {"reports", reports}};
}

ReportDocument from_json(const json& j) {
  ReportDocument doc;
  doc.schema_version = j.at("schema_version").get<int>();
  if (doc.schema_version != kSchemaVersion) {
    throw PreconditionError("unsupported report schema_version " + std::to_string(doc.schema_version));
  }
  doc.tool_version = j.at("tool_version").get<std::string>();
  doc.command = j.at("command").get<std::string>();
  doc.full = j.at("full").get<bool>();
  for (const json& r : j.at("reports")) doc.reports.push_back(report_from(r));
  return doc;
}

std::string to_text(const ReportDocument& doc) {
  std::ostringstream out;
  for (const auto& r : doc.reports) {
    out << r.statement;
    if (r.m != 0) out << " (m=" << r.m << ")";
    out << "  n=" << r.from << ".." << r.to << "\n";
    out << "  " << r.description << "\n";
    out << "  holds=" << r.counts.holds << " equality=" << r.counts.equality << " fails=" << r.counts.fails
        << " unknown=" << r.counts.unknown << "  precision start=" << r.policy.start << " cap=" << r.policy.cap
        << " max_used=" << r.max_precision_used << "\n";
    for (auto o : {arith::Outcome::Equality, arith::Outcome::Fails, arith::Outcome::Unknown}) {
      const std::string where = list_indices(r, o);
      if (!where.empty()) out << "  " << arith::to_string(o) << " at n = " << where << "\n";
    }
    out << "  verdict: " << (r.counts.all_hold() ? "HOLDS" : "DOES NOT HOLD") << "\n";
  }
  return out.str();
}

std::string to_csv(const ReportDocument& doc) {
  std::ostringstream out;
  out.precision(17);
  out << "statement,m,n,outcome,precision_used,margin\n";
  for (const auto& r : doc.reports) {
    for (const auto& rec : r.records) {
      out << r.statement << ',' << r.m << ',' << rec.n << ',' << arith::to_string(rec.outcome) << ','
          << rec.precision_used << ',';
      if (std::isfinite(rec.margin)) out << rec.margin;
      out << '\n';
    }
  }
  return out.str();
}

int exit_code(const ReportDocument& doc) {
  for (const auto& r : doc.reports) {
    if (!r.counts.all_hold()) return 1;
  }
  return 0;
}

}  // namespace opf::cli
