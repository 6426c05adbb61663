#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "opf/verifier.hpp"

namespace opf::cli {

inline constexpr int kSchemaVersion = 1;

std::string_view tool_version();

/// What `opf verify` emits. Per-n records are the non-Holds ones unless `full`.
struct ReportDocument {
  int schema_version = kSchemaVersion;
  std::string tool_version;
  std::string command;  // statement key, or "bridges"
  bool full = false;
  std::vector<verify::VerificationReport> reports;
};

/// Drops Holds records unless full is set, so the document matches its serialized form.
ReportDocument make_document(std::string command, std::vector<verify::VerificationReport> reports, bool full);

nlohmann::json to_json(const ReportDocument& doc);
/// Throws nlohmann::json::exception or PreconditionError on malformed input.
ReportDocument from_json(const nlohmann::json& j);

std::string to_text(const ReportDocument& doc);
std::string to_csv(const ReportDocument& doc);

/// 0 when every report holds throughout, 1 otherwise.
int exit_code(const ReportDocument& doc);

arith::Outcome parse_outcome(std::string_view text);

}  // namespace opf::cli
