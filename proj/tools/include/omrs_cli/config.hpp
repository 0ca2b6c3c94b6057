#ifndef OMRS_CLI_CONFIG_HPP
#define OMRS_CLI_CONFIG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "omrs/coxeter.hpp"

namespace omrs::cli {

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"roots",       "topes",         "biclosed", "clean",   "verify-omrs",
                                              "verify-finite", "induct",      "compare",  "xsection"};
  return names;
}

struct JobConfig {
  CoxeterMatrix matrix;
  std::string type;                 // named type, when given
  std::optional<int> depth;         // required for infinite types
  std::string command;              // may come from the command line instead
  std::uint64_t seed = 20240601;
  std::size_t samples = 2000;
  std::optional<std::size_t> prefix;
  std::optional<std::string> region;  // +/- pick string for xsection
  std::map<std::pair<int, int>, Rational> compare_bonds;
  std::optional<std::string> out;
  std::optional<std::string> svg;
  bool timings = false;
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::vector<std::string> errors_;
};

/// Parses the key-value config format.  Entries are `key = value`,
/// separated by newlines or `;`; `#` starts a comment.  Collects every
/// problem before throwing ConfigError.
///
///   type = A3                      named type, or instead:
///   rank = 3
///   m = [[1,3,inf],[3,1,3],[inf,3,1]]
///   bond.0.2 = -5/4                parameter of an infinite bond, <= -1
///   compare.bond.0.2 = -3/2        second realization for `compare`
///   depth = 6
///   command = induct
///   seed = 7
///   samples = 2000
///   prefix = 12                    induct / xsection prefix length
///   region = +-+                   xsection region over the prefix
///   out = report.json
///   svg = figure.svg
///   timings = false
JobConfig parse_config(const std::string& text);

/// Checks that need the command: depth present for infinite types, known
/// command name.  Throws ConfigError.
void validate_for_run(const JobConfig& cfg);

}  // namespace omrs::cli

#endif  // OMRS_CLI_CONFIG_HPP
