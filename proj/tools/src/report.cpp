#include "omrs_cli/report.hpp"

#include <cstdio>

namespace omrs::cli {

nlohmann::json config_echo(const JobConfig& cfg) {
  nlohmann::json j;
  if (!cfg.type.empty()) j["type"] = cfg.type;
  j["rank"] = cfg.matrix.rank;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : cfg.matrix.m) {
    nlohmann::json r = nlohmann::json::array();
    for (int e : row) {
      if (e == CoxeterMatrix::kInfinity) {
        r.push_back("inf");
      } else {
        r.push_back(e);
      }
    }
    rows.push_back(r);
  }
  j["m"] = rows;
  auto bonds = [&](const std::map<std::pair<int, int>, Rational>& params) {
    nlohmann::json b = nlohmann::json::object();
    for (int s = 0; s < cfg.matrix.rank; ++s) {
      for (int t = s + 1; t < cfg.matrix.rank; ++t) {
        if (!cfg.matrix.is_infinite(s, t)) continue;
        const auto it = params.find({s, t});
        const Rational c = it == params.end() ? Rational(-1) : it->second;
        b[std::to_string(s) + "," + std::to_string(t)] = c.get_str();
      }
    }
    return b;
  };
  j["bonds"] = bonds(cfg.matrix.bond_params);
  if (cfg.command == "compare") j["compare_bonds"] = bonds(cfg.compare_bonds);
  if (cfg.depth) j["depth"] = *cfg.depth;
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  if (cfg.prefix) j["prefix"] = *cfg.prefix;
  if (cfg.region) j["region"] = *cfg.region;
  return j;
}

nlohmann::json to_json(const CheckResult& check) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : check.witnesses) witnesses.push_back(nlohmann::json(w));
  return {{"name", check.name},
          {"claim", check.claim},
          {"passed", check.passed},
          {"cases", check.cases},
          {"witnesses", witnesses}};
}

nlohmann::json to_json(const ReportDocument& doc) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : doc.report.checks) checks.push_back(to_json(c));
  nlohmann::json j{{"version", kSchemaVersion},
                   {"tool", std::string("omrs ") + kToolVersion},
                   {"command", doc.command},
                   {"config", doc.config},
                   {"ok", doc.ok()},
                   {"checks", checks},
                   {"counts", nlohmann::json(doc.report.counts)},
                   {"flags", nlohmann::json(doc.report.flags)},
                   {"results", doc.results}};
  if (doc.include_timings) {
    nlohmann::json t = nlohmann::json::object();
    for (const auto& [k, v] : doc.timings) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", v);
      t[k] = buf;
    }
    j["timings"] = t;
  }
  return j;
}

std::string emit_report(const ReportDocument& doc) { return to_json(doc).dump() + "\n"; }

}  // namespace omrs::cli
