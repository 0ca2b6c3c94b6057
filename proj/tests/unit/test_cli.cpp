#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "omrs_cli/config.hpp"
#include "omrs_cli/report.hpp"
#include "omrs_cli/run.hpp"
#include "omrs_cli/svg.hpp"

using nlohmann::json;
using omrs::cli::ConfigError;
using omrs::cli::JobConfig;

namespace {

std::vector<std::string> errors_of(const std::string& text) {
  try {
    omrs::cli::parse_config(text);
  } catch (const ConfigError& e) {
    return e.errors();
  }
  return {};
}

std::vector<std::string> run_errors(const JobConfig& cfg) {
  try {
    omrs::cli::validate_for_run(cfg);
  } catch (const ConfigError& e) {
    return e.errors();
  }
  return {};
}

JobConfig config(const std::string& text, const std::string& command) {
  JobConfig cfg = omrs::cli::parse_config(text);
  cfg.command = command;
  return cfg;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "omrs_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(OMRS_BINARY) + " " + args + " > " + (scratch() / "stdout.txt").string() +
                          " 2> " + (scratch() / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string write_config(const std::string& name, const std::string& text) {
  const auto p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("config parsing") {
  const auto cfg = omrs::cli::parse_config(
      "# comment\nrank = 3\nm = [[1, 3, inf], [3, 1, 3], [inf, 3, 1]]\nbond.2.0 = -5/4; depth = 6\n"
      "compare.bond.0.2 = -3/2\nseed = 9\nsamples = 10\nprefix = 7\nregion = +-+\ntimings = true\n");
  CHECK(cfg.matrix.rank == 3);
  CHECK(cfg.matrix.is_infinite(0, 2));
  CHECK(cfg.matrix.bond(0, 2) == omrs::Rational(-5, 4));
  CHECK(cfg.compare_bonds.at({0, 2}) == omrs::Rational(-3, 2));
  CHECK(cfg.depth == 6);
  CHECK(cfg.seed == 9);
  CHECK(cfg.samples == 10);
  CHECK(cfg.prefix == 7u);
  CHECK(cfg.region == std::string("+-+"));
  CHECK(cfg.timings);
  CHECK(omrs::cli::parse_config("type = H3").matrix == omrs::CoxeterMatrix::named("H3"));
}

TEST_CASE("config errors are all collected") {
  const auto errs = errors_of("type = A2\nrank = 2\ncolour = blue\ndepth = 0\ndepth = 3\nbond.0.1 = x\nregion = +0\n");
  CHECK(errs.size() == 6);
  CHECK(std::count(errs.begin(), errs.end(), "unknown key 'colour'") == 1);
  CHECK(std::count(errs.begin(), errs.end(), "duplicate key 'depth'") == 1);
  CHECK(std::count(errs.begin(), errs.end(), "depth must be a positive integer") == 1);
  CHECK(std::count(errs.begin(), errs.end(), "bond.0.1 must be a rational such as -3/2") == 1);
  CHECK(std::count(errs.begin(), errs.end(), "region must be a string of + and -") == 1);
  CHECK(std::count(errs.begin(), errs.end(), "give either type or rank and m, not both") == 1);

  const auto matrix = errors_of("rank = 3\nm = [[1,3,inf],[3,1,3],[inf,3,2]]\nbond.0.1 = -2\ncompare.bond.0.2 = -1/2");
  CHECK(std::count(matrix.begin(), matrix.end(), "m[2][2] must be 1") == 1);
  CHECK(std::count(matrix.begin(), matrix.end(), "bond parameter given for finite bond m[0][1]") == 1);
  CHECK(std::count(matrix.begin(), matrix.end(), "compare.bond parameter must be <= -1 for m[0][2] (got -1/2)") == 1);

  CHECK(errors_of("rank = 2") == std::vector<std::string>{"missing key 'm' (or 'type')"});
  CHECK(errors_of("m = [[1,3],[3,1]]") == std::vector<std::string>{"missing key 'rank' (or 'type')"});
  CHECK(errors_of("type = E9").size() == 1);
  CHECK(errors_of("type = A2\ncommand = dance") == std::vector<std::string>{"unknown command 'dance'"});
  CHECK(errors_of("rank = 2\nm = [1,3]") == std::vector<std::string>{"m must look like [[1,3],[3,1]]"});
}

TEST_CASE("run-time validation") {
  CHECK(run_errors(config("type = A2~", "topes")) == std::vector<std::string>{"depth is required for infinite types"});
  CHECK(run_errors(config("type = A2~\ndepth = 3", "verify-finite")) ==
        std::vector<std::string>{"verify-finite needs a finite type"});
  CHECK(run_errors(config("type = B2", "induct")) == std::vector<std::string>{"induct needs a rank-3 system"});
  CHECK(run_errors(config("type = B2", "compare")) == std::vector<std::string>{"compare needs a depth"});
  CHECK(run_errors(config("type = B2", "")) == std::vector<std::string>{"no command given"});
  CHECK(run_errors(config("type = B3", "clean")).empty());
}

TEST_CASE("report envelope") {
  const auto out = omrs::cli::run(config("type = A2", "clean"));
  CHECK(omrs::cli::exit_code(out) == omrs::cli::kPass);
  const std::string text = omrs::cli::emit_report(out.doc);
  CHECK(text.back() == '\n');
  CHECK(text.find("\"results\":{\"clean\":true,\"quasitopes\":6,\"topes\":6}") != std::string::npos);
  const json doc = json::parse(text);
  CHECK(doc["version"] == omrs::cli::kSchemaVersion);
  CHECK(doc["tool"] == std::string("omrs ") + omrs::cli::kToolVersion);
  CHECK(doc["command"] == "clean");
  CHECK(doc["ok"] == true);
  CHECK(doc["config"]["type"] == "A2");
  CHECK(doc["counts"]["topes"] == 6);
  CHECK_FALSE(doc.contains("timings"));
  REQUIRE(doc["checks"].is_array());
  for (const auto& c : doc["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("claim"));
    CHECK(c["passed"] == true);
    CHECK(c["witnesses"].empty());
  }

  auto timed = config("type = A2\ntimings = true", "topes");
  const json t = json::parse(omrs::cli::emit_report(omrs::cli::run(timed).doc));
  REQUIRE(t.contains("timings"));
  for (const auto& [k, v] : t["timings"].items()) CHECK(std::regex_match(v.get<std::string>(), std::regex(R"(\d+\.\d{3})")));
}

TEST_CASE("command results") {
  const json roots = json::parse(omrs::cli::emit_report(omrs::cli::run(config("type = A2", "roots")).doc));
  REQUIRE(roots["results"]["roots"].size() == 3);
  CHECK(roots["counts"]["positive_roots"] == 3);

  const json topes = json::parse(omrs::cli::emit_report(omrs::cli::run(config("type = B2", "topes")).doc));
  CHECK(topes["counts"]["topes"] == 8);
  CHECK(topes["counts"]["regions_incremental"] == 8);
  CHECK(topes["results"]["topes"].size() == 8);

  const json bic = json::parse(omrs::cli::emit_report(omrs::cli::run(config("type = G2", "biclosed")).doc));
  CHECK(bic["results"]["count"] == 12);

  const json fin = json::parse(omrs::cli::emit_report(omrs::cli::run(config("type = A3", "verify-finite")).doc));
  CHECK(fin["results"]["unique"] == true);
  CHECK(fin["results"]["group_order"] == 24);

  const json ind = json::parse(omrs::cli::emit_report(omrs::cli::run(config("type = A2~\ndepth = 5", "induct")).doc));
  CHECK(ind["results"]["all_pass"] == true);
  CHECK(ind["results"]["prefixes_checked"] == 15);

  const auto cmp = omrs::cli::run(config("type = (3,3,inf)\ndepth = 4\ncompare.bond.0.2 = -3/2\nsamples = 50", "compare"));
  CHECK(omrs::cli::exit_code(cmp) == omrs::cli::kPass);
  CHECK(cmp.doc.results["equal"] == true);

  const auto om = omrs::cli::run(config("type = B2\nsamples = 100", "verify-omrs"));
  CHECK(omrs::cli::exit_code(om) == omrs::cli::kPass);
}

TEST_CASE("cross-section figure") {
  const auto out = omrs::cli::run(config("type = A2~\ndepth = 4", "xsection"));
  REQUIRE(out.svg.has_value());
  const std::string& svg = *out.svg;
  const json r = out.doc.results;
  const std::size_t prefix = r["prefix"];
  const std::size_t sides = r["sides"].size();
  CHECK(sides >= 4);
  CHECK(r["sides"][0] == "b" + std::to_string(prefix));
  CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
  CHECK(count(svg, "<line class=\"trace\"") >= sides);
  CHECK(count(svg, "<line class=\"trace\"") <= prefix);
  CHECK(count(svg, "<line class=\"trace\"") == count(svg, "class=\"trace-label\""));
  CHECK(count(svg, "<circle class=\"vertex\"") == sides);
  for (std::size_t k = 1; k <= sides; ++k) {
    CHECK(svg.find("font-size=\"9\">" + std::to_string(k) + "</tspan></text>") != std::string::npos);
  }
  CHECK(count(svg, "stroke-width=\"2\"") == sides);
  for (const char* label : {">R</text>", ">X</text>", ">T</text>"}) CHECK(count(svg, label) == 1);
  CHECK(svg.find("-0.000000") == std::string::npos);
  CHECK(svg.find("nan") == std::string::npos);
  CHECK(r["T"].get<std::string>().size() == prefix);
  CHECK(r["X"].get<std::string>().size() == prefix);
  CHECK(r["T"] != r["X"]);

  // Same input, same bytes.
  const auto again = omrs::cli::run(config("type = A2~\ndepth = 4", "xsection"));
  CHECK(*again.svg == svg);
  CHECK(omrs::cli::emit_report(again.doc) == omrs::cli::emit_report(out.doc));
}

TEST_CASE("binary exit codes and outputs") {
  const auto good = write_config("a2.cfg", "type = A2\n");
  const auto bad = write_config("bad.cfg", "type = A2\nfoo = 1\ndepth = x\n");
  const auto aff = write_config("aff.cfg", "type = A2~\ndepth = 4\n");
  const auto out = (scratch() / "report.json").string();
  const auto svg = (scratch() / "fig.svg").string();

  CHECK(run_binary("clean --config " + good) == 0);
  CHECK(slurp(scratch() / "stdout.txt").find("\"clean\":true") != std::string::npos);

  CHECK(run_binary("clean --config " + bad) == 2);
  const std::string err = slurp(scratch() / "stderr.txt");
  CHECK(err.find("unknown key 'foo'") != std::string::npos);
  CHECK(err.find("depth must be a positive integer") != std::string::npos);

  CHECK(run_binary("topes --config " + aff + " --depth 0") == 2);
  CHECK(run_binary("topes --config /nonexistent.cfg") == 2);
  CHECK(run_binary("fly --config " + good) == 2);
  CHECK(run_binary("induct --config " + good) == 2);

  std::filesystem::remove(out);
  CHECK(run_binary("xsection --config " + aff + " --out " + out + " --svg " + svg) == 0);
  CHECK(std::filesystem::exists(out));
  CHECK(std::filesystem::exists(svg));
  CHECK_FALSE(std::filesystem::exists(out + ".tmp"));
  const std::string first = slurp(out), first_svg = slurp(svg);
  CHECK(run_binary("xsection --config " + aff + " --out " + out + " --svg " + svg) == 0);
  CHECK(slurp(out) == first);
  CHECK(slurp(svg) == first_svg);
  CHECK(json::parse(first)["command"] == "xsection");
}
