#ifndef OMRS_CLI_RUN_HPP
#define OMRS_CLI_RUN_HPP

#include <optional>
#include <string>

#include "omrs_cli/config.hpp"
#include "omrs_cli/report.hpp"

namespace omrs::cli {

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kConfigError = 2 };

struct RunOutput {
  ReportDocument doc;
  std::optional<std::string> svg;  // xsection only
};

/// Executes cfg.command.  Throws ConfigError when the config does not suit
/// the command.
RunOutput run(const JobConfig& cfg);

inline int exit_code(const RunOutput& out) { return out.doc.ok() ? kPass : kCheckFailure; }

}  // namespace omrs::cli

#endif  // OMRS_CLI_RUN_HPP
