#include "omrs_cli/run.hpp"

#include <chrono>
#include <functional>

#include "omrs_cli/svg.hpp"

namespace omrs::cli {

namespace {

using nlohmann::json;

// Lists longer than this are summarized by their count only.
constexpr std::size_t kListLimit = 1000;

class Stopwatch {
 public:
  explicit Stopwatch(std::map<std::string, double>& sink) : sink_(sink) {}
  template <typename F>
  auto time(const std::string& phase, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    auto result = f();
    sink_[phase] += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  }

 private:
  std::map<std::string, double>& sink_;
};

RootSlice build_slice(const JobConfig& cfg) {
  return cfg.depth ? enumerate_roots(cfg.matrix, *cfg.depth) : enumerate_all_roots(cfg.matrix);
}

std::string class_name(std::size_t k) { return "b" + std::to_string(k + 1); }

json class_names(const ClassSet& c) {
  json out = json::array();
  for (std::size_t k : members(c)) out.push_back(class_name(k));
  return out;
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

TopalSet parse_region(const std::string& s) {
  ClassSet picks(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '+') picks.set(k);
  }
  return TopalSet(picks);
}

void run_roots(const JobConfig& cfg, RunOutput& out, Stopwatch& sw) {
  const RootSlice slice = sw.time("roots", [&] { return build_slice(cfg); });
  const auto labels = canonical_label(slice);
  json roots = json::array();
  int max_depth = 0;
  for (std::size_t k = 0; k < slice.class_count(); ++k) {
    const Root& r = slice.root(2 * k);
    max_depth = std::max(max_depth, r.depth);
    roots.push_back({{"name", class_name(k)}, {"depth", r.depth}, {"vector", vector_json(r.vec)},
                     {"label", labels[2 * k].to_string()}});
  }
  out.doc.results["roots"] = roots;
  out.doc.report.counts["positive_roots"] = static_cast<std::int64_t>(slice.class_count());
  out.doc.report.counts["max_depth"] = max_depth;
}

void run_topes(const JobConfig& cfg, RunOutput& out, Stopwatch& sw) {
  const RootSlice slice = build_slice(cfg);
  const OrientedMatroid m = OrientedMatroid::realizable(slice);
  const auto topes = sw.time("flip_search", [&] { return enumerate_topes(m); });
  const std::size_t inserted = sw.time("insertion", [&] { return count_regions_incremental(slice); });
  auto& report = out.doc.report;
  report.counts["topes"] = static_cast<std::int64_t>(topes.size());
  report.counts["regions_incremental"] = static_cast<std::int64_t>(inserted);
  report.check("two_algorithm_agreement", "flip search and incremental insertion count the same regions")
      .record(topes.size() == inserted, [&] {
        return Witness{{"flip_search", std::to_string(topes.size())}, {"insertion", std::to_string(inserted)}};
      });
  const TopeSet index(topes.begin(), topes.end());
  auto& neg = report.check("negation_closed", "the negative of a tope is a tope");
  for (const auto& t : topes) neg.record(index.count(t.negated()) > 0, [&] { return Witness{{"tope", t.to_string()}}; });
  if (topes.size() <= kListLimit) {
    const auto reo = sw.time("reorientation", [&] { return check_reorientation(topes); });
    auto& c = report.check("reorientation", "topes with nothing strictly between them are adjacent");
    c.cases = reo.pairs_checked;
    for (const auto& [a, b] : reo.violations) {
      c.fail(Witness{{"first", a.to_string()}, {"second", b.to_string()}});
    }
    json list = json::array();
    for (const auto& t : topes) list.push_back(t.to_string());
    out.doc.results["topes"] = list;
  }
  out.doc.results["listed"] = topes.size() <= kListLimit;
}

void run_biclosed(const JobConfig& cfg, RunOutput& out, Stopwatch& sw) {
  const RootSlice slice = build_slice(cfg);
  const Rank2Structure structure(slice);
  const auto sets = sw.time("backtracking", [&] { return enumerate_biclosed(structure); });
  auto& report = out.doc.report;
  report.counts["biclosed"] = static_cast<std::int64_t>(sets.size());
  auto& sym = report.check("complement_symmetry", "the complement of a biclosed set is biclosed");
  for (const auto& b : sets) {
    sym.record(structure.is_biclosed(~b), [&] { return Witness{{"set", TopalSet(b).to_string()}}; });
  }
  out.doc.results["count"] = sets.size();
  if (sets.size() <= kListLimit) {
    json list = json::array();
    for (const auto& b : sets) list.push_back(class_names(b));
    out.doc.results["sets"] = list;
  }
  out.doc.results["listed"] = sets.size() <= kListLimit;
}

void run_clean(const JobConfig& cfg, RunOutput& out, Stopwatch& sw) {
  const RootSlice slice = build_slice(cfg);
  const OrientedMatroid m = OrientedMatroid::realizable(slice);
  const auto topes = sw.time("flip_search", [&] { return enumerate_topes(m); });
  const CleanReport clean = sw.time("backtracking", [&] { return check_clean(slice, topes); });
  auto& report = out.doc.report;
  auto& lemma = report.check("tope_implies_quasitope", "every tope is a quasitope");
  lemma.cases = clean.topes;
  for (const auto& t : clean.tope_not_quasitope) {
    lemma.fail(Witness{{"tope", t.to_string()}});
  }
  auto& cl = report.check("clean", "every quasitope is a tope");
  cl.cases = clean.quasitopes;
  for (const auto& q : clean.quasitope_not_tope) {
    cl.fail(Witness{{"quasitope", q.to_string()}});
  }
  report.counts["topes"] = static_cast<std::int64_t>(clean.topes);
  report.counts["quasitopes"] = static_cast<std::int64_t>(clean.quasitopes);
  out.doc.results = {{"clean", clean.clean()}, {"quasitopes", clean.quasitopes}, {"topes", clean.topes}};
}

void run_verify_omrs(const JobConfig& cfg, RunOutput& out, Stopwatch& sw) {
  const RootSlice slice = build_slice(cfg);
  const OrientedMatroid m = OrientedMatroid::realizable(slice);
  const bool finite = is_finite_type(cfg.matrix);
  const GroupEnumeration group = enumerate_group(cfg.matrix, finite ? 64 : *cfg.depth);
  OmrsCheckOptions options;
  options.samples = cfg.samples;
  options.seed = cfg.seed;
  out.doc.report = sw.time("omrs", [&] { return check_omrs_axioms(m, group.elements, options); });
  AxiomCheckOptions axiom_options;
  axiom_options.random_samples = cfg.samples;
  axiom_options.seed = cfg.seed;
  const AxiomReport axioms = sw.time("axioms", [&] { return check_axioms(m, axiom_options); });
  for (const auto& [name, passed] : axioms.results) {
    auto& c = out.doc.report.check("axiom." + name, "oriented matroid law " + name);
    c.cases = axioms.subsets_checked;
    if (passed) continue;
    for (const auto& w : axioms.failures) {
      if (w.check != name) continue;
      c.fail(Witness{{"witness", w.describe(m.ground())}});
    }
    c.passed = false;
  }
  out.doc.report.counts["axiom_subsets"] = static_cast<std::int64_t>(axioms.subsets_checked);
  out.doc.report.flags["axioms_exhaustive"] = axioms.exhaustive;
  out.doc.results = {{"omrs", out.doc.report.ok()}};
}

void run_verify_finite(const JobConfig& cfg, RunOutput& out, Stopwatch& sw) {
  out.doc.report = sw.time("replay", [&] { return verify_finite_uniqueness(cfg.matrix); });
  out.doc.results = {{"unique", out.doc.report.flags["unique"]}, {"group_order", out.doc.report.counts["group"]}};
}

void run_induct(const JobConfig& cfg, RunOutput& out, Stopwatch& sw) {
  const RootSlice slice = build_slice(cfg);
  const std::size_t n = cfg.prefix ? *cfg.prefix : slice.class_count();
  if (n > slice.class_count()) throw ConfigError({"prefix exceeds the number of positive roots"});
  if (slice.span_rank() != 3) throw ConfigError({"induct needs a slice spanning dimension 3"});
  out.doc.report = sw.time("induction", [&] { return simulate_induction(slice, n); });
  out.doc.results = {{"prefixes_checked", n}, {"all_pass", out.doc.report.ok()}};
}

void run_compare(const JobConfig& cfg, RunOutput& out, Stopwatch& sw) {
  CoxeterMatrix other = cfg.matrix;
  other.bond_params = cfg.compare_bonds;
  CompareOptions options;
  options.samples = cfg.samples;
  options.seed = cfg.seed;
  out.doc.report = sw.time("compare", [&] { return compare_realizations(cfg.matrix, other, *cfg.depth, options); });
  out.doc.results = {{"equal", out.doc.report.flags["equal"]}};
}

void run_xsection(const JobConfig& cfg, RunOutput& out, Stopwatch& sw) {
  const RootSlice slice = build_slice(cfg);
  auto& found = out.doc.report.check("region_found", "a region to slice exists");
  std::optional<std::pair<std::size_t, TopalSet>> choice;
  if (cfg.region) {
    const std::size_t n = cfg.region->size();
    if (n > slice.class_count() || (cfg.prefix && *cfg.prefix != n)) {
      throw ConfigError({"region length must equal the prefix length"});
    }
    choice.emplace(n, parse_region(*cfg.region));
  } else {
    const std::size_t lo = cfg.prefix ? *cfg.prefix : 1;
    const std::size_t hi = cfg.prefix ? *cfg.prefix : slice.class_count();
    if (hi > slice.class_count()) throw ConfigError({"prefix exceeds the number of positive roots"});
    // First region bordering the newest root with at least 4 walls.
    for (std::size_t n = lo; n <= hi && !choice; ++n) {
      const RootSlice prefix = slice.prefix(n);
      if (prefix.span_rank() != 3) continue;
      const OrientedMatroid m = OrientedMatroid::realizable(prefix);
      for (const auto& r : enumerate_topes(m)) {
        const ClassSet w = walls(m, r);
        if (w.test(n - 1) && w.count() >= 4) {
          choice.emplace(n, r);
          break;
        }
      }
    }
  }
  found.record(choice.has_value(), [] { return Witness{}; });
  if (!choice) return;
  const auto& [n, region] = *choice;
  const RootSlice prefix = slice.prefix(n);
  const OrientedMatroid m = OrientedMatroid::realizable(prefix);
  auto& valid = out.doc.report.check("region_is_tope", "the chosen region is a tope of the prefix");
  valid.record(prefix.span_rank() == 3 && is_tope(m, region), [&] { return Witness{{"region", region.to_string()}}; });
  if (!valid.passed) return;
  const ClassSet w = walls(m, region);
  const std::size_t first = w.test(n - 1) ? n - 1 : w.find_first();
  auto& section = out.doc.report.check("cross_section", "the region is bounded in the slicing plane");
  std::optional<CrossSection> cs;
  try {
    cs = sw.time("cross_section", [&] { return make_cross_section(m, region, first); });
    section.record(true, {});
  } catch (const CrossSectionError& e) {
    section.record(false, [&] { return Witness{{"error", e.what()}}; });
    return;
  }
  out.svg = emit_svg(*cs, prefix);
  json sides = json::array();
  for (std::size_t s : cs->sides) sides.push_back(class_name(s));
  json vertices = json::array();
  for (const auto& v : cs->vertices) vertices.push_back(vector_json(v));
  out.doc.results = {{"prefix", n},
                     {"region", region.to_string()},
                     {"u", vector_json(cs->u)},
                     {"sides", sides},
                     {"vertices", vertices},
                     {"attempts", cs->attempts},
                     {"lines", cs->line_classes.size()}};
  if (cs->side_count() >= 3) {
    out.doc.results["T"] = flip(region, cs->sides[0]).to_string();
    out.doc.results["X"] = flip(region, cs->sides[2]).to_string();
  }
  out.doc.report.counts["sides"] = static_cast<std::int64_t>(cs->side_count());
}

}  // namespace

RunOutput run(const JobConfig& cfg) {
  validate_for_run(cfg);
  RunOutput out;
  out.doc.command = cfg.command;
  out.doc.config = config_echo(cfg);
  out.doc.include_timings = cfg.timings;
  Stopwatch sw(out.doc.timings);
  static const std::map<std::string, std::function<void(const JobConfig&, RunOutput&, Stopwatch&)>> dispatch{
      {"roots", run_roots},   {"topes", run_topes},         {"biclosed", run_biclosed},
      {"clean", run_clean},   {"verify-omrs", run_verify_omrs}, {"verify-finite", run_verify_finite},
      {"induct", run_induct}, {"compare", run_compare},     {"xsection", run_xsection}};
  dispatch.at(cfg.command)(cfg, out, sw);
  out.doc.report.subject = cfg.command;
  return out;
}

}  // namespace omrs::cli
