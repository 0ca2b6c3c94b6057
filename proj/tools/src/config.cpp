#include "omrs_cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>
#include <sstream>

namespace omrs::cli {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += "; ";
    s += p;
  }
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
std::optional<T> parse_unsigned(const std::string& v) {
  if (v.empty() || !std::all_of(v.begin(), v.end(), [](unsigned char c) { return std::isdigit(c); })) {
    return std::nullopt;
  }
  try {
    return static_cast<T>(std::stoull(v));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<Rational> parse_rational(const std::string& v) {
  static const std::regex pattern(R"(^-?[0-9]+(/[0-9]+)?$)");
  if (!std::regex_match(v, pattern)) return std::nullopt;
  Rational r(v);
  if (r.get_den() == 0) return std::nullopt;
  r.canonicalize();
  return r;
}

// [[1,3,inf],[3,1,3],[inf,3,1]]
std::optional<std::vector<std::vector<int>>> parse_matrix(const std::string& v, std::vector<std::string>& errors) {
  std::string s;
  for (char c : v) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.size() < 4 || s.substr(0, 2) != "[[" || s.substr(s.size() - 2) != "]]") {
    errors.push_back("m must look like [[1,3],[3,1]]");
    return std::nullopt;
  }
  std::vector<std::vector<int>> rows;
  const std::string body = s.substr(2, s.size() - 4);
  std::size_t pos = 0;
  while (true) {
    const auto end = body.find("],[", pos);
    const std::string row = body.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    std::vector<int> entries;
    std::stringstream ss(row);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item == "inf") {
        entries.push_back(CoxeterMatrix::kInfinity);
      } else if (auto n = parse_unsigned<int>(item); n && *n >= 1) {
        entries.push_back(*n);
      } else {
        errors.push_back("matrix entry '" + item + "' must be a positive integer or inf");
        return std::nullopt;
      }
    }
    rows.push_back(std::move(entries));
    if (end == std::string::npos) break;
    pos = end + 3;
  }
  return rows;
}

// bond.S.T or compare.bond.S.T
std::optional<std::pair<int, int>> bond_key(const std::string& key, const std::string& prefix) {
  const std::regex pattern("^" + prefix + R"(\.([0-9])\.([0-9])$)");
  std::smatch match;
  if (!std::regex_match(key, match, pattern)) return std::nullopt;
  int s = std::stoi(match[1]);
  int t = std::stoi(match[2]);
  if (s > t) std::swap(s, t);
  return std::make_pair(s, t);
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> errors)
    : std::runtime_error("config error: " + join(errors)), errors_(std::move(errors)) {}

JobConfig parse_config(const std::string& text) {
  std::vector<std::string> errors;
  std::vector<std::pair<std::string, std::string>> entries;
  std::set<std::string> seen;
  std::stringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::stringstream parts(line);
    std::string part;
    while (std::getline(parts, part, ';')) {
      part = trim(part);
      if (part.empty()) continue;
      const auto eq = part.find('=');
      if (eq == std::string::npos) {
        errors.push_back("expected key = value, got '" + part + "'");
        continue;
      }
      std::string key = trim(part.substr(0, eq));
      std::string value = trim(part.substr(eq + 1));
      if (!seen.insert(key).second) {
        errors.push_back("duplicate key '" + key + "'");
        continue;
      }
      entries.emplace_back(std::move(key), std::move(value));
    }
  }

  JobConfig cfg;
  std::optional<int> rank;
  std::optional<std::vector<std::vector<int>>> matrix;
  std::map<std::pair<int, int>, Rational> bonds;
  for (const auto& [key, value] : entries) {
    if (key == "type") {
      cfg.type = value;
    } else if (key == "rank") {
      rank = parse_unsigned<int>(value);
      if (!rank) errors.push_back("rank must be an integer");
    } else if (key == "m") {
      matrix = parse_matrix(value, errors);
    } else if (auto b = bond_key(key, "bond")) {
      if (auto c = parse_rational(value)) {
        bonds[*b] = *c;
      } else {
        errors.push_back(key + " must be a rational such as -3/2");
      }
    } else if (auto cb = bond_key(key, R"(compare\.bond)")) {
      if (auto c = parse_rational(value)) {
        cfg.compare_bonds[*cb] = *c;
      } else {
        errors.push_back(key + " must be a rational such as -3/2");
      }
    } else if (key == "depth") {
      auto d = parse_unsigned<int>(value);
      if (!d || *d < 1) {
        errors.push_back("depth must be a positive integer");
      } else {
        cfg.depth = *d;
      }
    } else if (key == "command") {
      cfg.command = value;
    } else if (key == "seed") {
      auto s = parse_unsigned<std::uint64_t>(value);
      if (!s) {
        errors.push_back("seed must be a nonnegative integer");
      } else {
        cfg.seed = *s;
      }
    } else if (key == "samples") {
      auto s = parse_unsigned<std::size_t>(value);
      if (!s) {
        errors.push_back("samples must be a nonnegative integer");
      } else {
        cfg.samples = *s;
      }
    } else if (key == "prefix") {
      auto p = parse_unsigned<std::size_t>(value);
      if (!p || *p < 1) {
        errors.push_back("prefix must be a positive integer");
      } else {
        cfg.prefix = *p;
      }
    } else if (key == "region") {
      if (value.empty() || value.find_first_not_of("+-") != std::string::npos) {
        errors.push_back("region must be a string of + and -");
      } else {
        cfg.region = value;
      }
    } else if (key == "out") {
      cfg.out = value;
    } else if (key == "svg") {
      cfg.svg = value;
    } else if (key == "timings") {
      if (value == "true") {
        cfg.timings = true;
      } else if (value != "false") {
        errors.push_back("timings must be true or false");
      }
    } else {
      errors.push_back("unknown key '" + key + "'");
    }
  }

  if (!cfg.type.empty() && (rank || matrix)) errors.push_back("give either type or rank and m, not both");
  if (!cfg.type.empty()) {
    try {
      cfg.matrix = CoxeterMatrix::named(cfg.type);
    } catch (const std::invalid_argument& e) {
      errors.push_back(e.what());
    }
  } else if (!rank || !matrix) {
    if (!rank) errors.push_back("missing key 'rank' (or 'type')");
    if (!matrix && std::none_of(errors.begin(), errors.end(),
                                [](const std::string& e) { return e.rfind("m must", 0) == 0 || e.rfind("matrix", 0) == 0; })) {
      errors.push_back("missing key 'm' (or 'type')");
    }
  } else {
    cfg.matrix = CoxeterMatrix::from_entries(*matrix);
    if (*rank != cfg.matrix.rank) errors.push_back("rank does not match the size of m");
    cfg.matrix.rank = *rank;
  }
  if (cfg.matrix.rank != 0) {
    cfg.matrix.bond_params = bonds;
    for (const auto& e : cfg.matrix.validation_errors()) errors.push_back(e);
    CoxeterMatrix second = cfg.matrix;
    second.bond_params = cfg.compare_bonds;
    for (const auto& e : second.validation_errors()) {
      if (e.find("bond") != std::string::npos) errors.push_back("compare." + e);
    }
  }
  if (!cfg.command.empty() && std::find(commands().begin(), commands().end(), cfg.command) == commands().end()) {
    errors.push_back("unknown command '" + cfg.command + "'");
  }
  if (!errors.empty()) throw ConfigError(errors);
  return cfg;
}

void validate_for_run(const JobConfig& cfg) {
  std::vector<std::string> errors;
  if (cfg.command.empty()) {
    errors.push_back("no command given");
  } else if (std::find(commands().begin(), commands().end(), cfg.command) == commands().end()) {
    errors.push_back("unknown command '" + cfg.command + "'");
  }
  const bool finite = is_finite_type(cfg.matrix);
  if (!finite && !cfg.depth) errors.push_back("depth is required for infinite types");
  if (cfg.command == "verify-finite" && !finite) errors.push_back("verify-finite needs a finite type");
  if ((cfg.command == "induct" || cfg.command == "xsection") && cfg.matrix.rank != 3) {
    errors.push_back(cfg.command + " needs a rank-3 system");
  }
  if (cfg.command == "compare" && !cfg.depth) errors.push_back("compare needs a depth");
  if (!errors.empty()) throw ConfigError(errors);
}

}  // namespace omrs::cli
