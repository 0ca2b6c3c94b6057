#ifndef OMRS_CLI_REPORT_HPP
#define OMRS_CLI_REPORT_HPP

#include <map>
#include <string>

#include <json.hpp>

#include "omrs/verify.hpp"
#include "omrs_cli/config.hpp"

namespace omrs::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

struct ReportDocument {
  std::string command;
  nlohmann::json config = nlohmann::json::object();
  VerificationReport report;
  nlohmann::json results = nlohmann::json::object();
  /// Wall-clock seconds per phase; only emitted when requested, since they
  /// break byte-for-byte reproducibility.
  std::map<std::string, double> timings;
  bool include_timings = false;

  bool ok() const { return report.ok(); }
};

/// Normalized echo of a config: type or matrix, bonds, depth and options.
nlohmann::json config_echo(const JobConfig& cfg);

nlohmann::json to_json(const CheckResult& check);
nlohmann::json to_json(const ReportDocument& doc);

/// Canonical JSON text: sorted keys, integers only (timings as fixed
/// three-decimal strings), compact, newline-terminated.
std::string emit_report(const ReportDocument& doc);

}  // namespace omrs::cli

#endif  // OMRS_CLI_REPORT_HPP
