#include "omrs/verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace omrs {

void CheckResult::record(bool ok, const std::function<Witness()>& witness) {
  ++cases;
  if (ok) return;
  passed = false;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(witness());
}

void CheckResult::fail(Witness witness) {
  passed = false;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

CheckResult& VerificationReport::check(const std::string& name, const std::string& claim) {
  for (auto& c : checks) {
    if (c.name == name) return c;
  }
  checks.push_back({name, claim, true, 0, {}});
  return checks.back();
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (const auto& c : other.checks) {
    CheckResult copy = c;
    copy.name = prefix + c.name;
    checks.push_back(std::move(copy));
  }
  for (const auto& [k, v] : other.counts) counts[prefix + k] = v;
  for (const auto& [k, v] : other.flags) flags[prefix + k] = v;
}

ElementSet random_subset(std::size_t ground, std::mt19937_64& rng) {
  ElementSet x(ground);
  if (ground == 0) return x;
  if (rng() % 4 == 3) {
    for (std::size_t e = 0; e < ground; ++e) {
      if (rng() % 4 == 0) x.set(e);
    }
  } else {
    const std::size_t k = rng() % (std::min<std::size_t>(ground, 6) + 1);
    for (std::size_t j = 0; j < k; ++j) x.set(rng() % ground);
  }
  return x;
}

namespace {

ElementSet permute(const std::vector<std::size_t>& perm, const ElementSet& x) {
  ElementSet out(x.size());
  for (auto e = x.find_first(); e != ElementSet::npos; e = x.find_next(e)) out.set(perm[e]);
  return out;
}

std::string set_string(const ElementSet& x, const GroundSet& ground) { return format_set(x, ground.names()); }

std::string class_list(const ClassSet& c) {
  std::string s = "{";
  bool first = true;
  for (std::size_t k : members(c)) {
    if (!first) s += ",";
    s += "b" + std::to_string(k + 1);
    first = false;
  }
  return s + "}";
}

std::string word_string(const std::vector<int>& word) {
  std::string s;
  for (int g : word) s += "s" + std::to_string(g);
  return s.empty() ? "e" : s;
}

ElementSet positive_elements(std::size_t classes) {
  ElementSet x(2 * classes);
  for (std::size_t k = 0; k < classes; ++k) x.set(2 * k);
  return x;
}

}  // namespace

VerificationReport check_omrs_axioms(const OrientedMatroid& m, const RootSlice& slice,
                                     const std::vector<GroupElement>& group, const OmrsCheckOptions& options) {
  if (m.size() != slice.size()) throw std::invalid_argument("check_omrs_axioms: matroid and slice sizes differ");
  VerificationReport report;
  report.subject = "omrs-axioms";
  const std::size_t n = slice.size();

  std::vector<std::pair<const GroupElement*, std::vector<std::size_t>>> usable;
  for (const auto& g : group) {
    if (auto perm = element_permutation(slice, g.action)) usable.emplace_back(&g, std::move(*perm));
  }
  report.counts["group_elements"] = static_cast<std::int64_t>(group.size());
  report.counts["group_elements_used"] = static_cast<std::int64_t>(usable.size());

  auto& equi = report.check("equivariance", "closure commutes with every group element preserving the slice");
  auto test_equivariance = [&](const GroupElement& g, const std::vector<std::size_t>& perm, const ElementSet& x) {
    const ElementSet lhs = m.closure(permute(perm, x));
    const ElementSet rhs = permute(perm, m.closure(x));
    equi.record(lhs == rhs, [&] {
      return Witness{{"w", word_string(g.word)}, {"set", set_string(x, m.ground())}};
    });
  };
  std::mt19937_64 rng(options.seed);
  if (!usable.empty()) {
    for (std::size_t i = 0; i < options.samples; ++i) {
      const auto& [g, perm] = usable[rng() % usable.size()];
      test_equivariance(*g, perm, random_subset(n, rng));
    }
  }
  for (const auto& [g, perm] : usable) {
    for (std::size_t e = 0; e < n; ++e) test_equivariance(*g, perm, m.singleton(e));
    for (const auto& x : options.extra_sets) test_equivariance(*g, perm, x);
  }

  auto& pos = report.check("positive_closed", "the positive system is closed");
  const ElementSet plus = positive_elements(slice.class_count());
  pos.record(m.is_closed(plus), [&] { return Witness{{"closure", set_string(m.closure(plus), m.ground())}}; });

  auto& planar = report.check("rank2_cone", "closure equals cone closure on sets spanning at most a plane");
  auto test_planar = [&](const ElementSet& x) {
    planar.record(m.closure(x) == cone_closure(slice, x), [&] { return Witness{{"set", set_string(x, m.ground())}}; });
  };
  if (slice.dimension() == 2 && n <= 16) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) test_planar(ElementSet(n, bits));
  } else {
    if (n <= 60) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) test_planar(m.singleton(a) | m.singleton(b));
      }
    }
    for (std::size_t i = 0; i < options.samples; ++i) {
      ElementSet x(n);
      if (slice.dimension() == 2) {
        x = random_subset(n, rng);
      } else {
        // Random subset of the roots on the plane of two random classes.
        const std::size_t ca = rng() % slice.class_count();
        const std::size_t cb = rng() % slice.class_count();
        if (ca == cb) continue;
        const Vector normal = cross(slice.vec(2 * ca), slice.vec(2 * cb));
        for (std::size_t e = 0; e < n; ++e) {
          if (dot(normal, slice.vec(e)).is_zero() && rng() % 2 == 0) x.set(e);
        }
      }
      test_planar(x);
    }
  }
  return report;
}

VerificationReport check_omrs_axioms(const OrientedMatroid& m, const std::vector<GroupElement>& group,
                                     const OmrsCheckOptions& options) {
  if (!m.realization()) throw std::invalid_argument("check_omrs_axioms: matroid has no realization");
  return check_omrs_axioms(m, *m.realization(), group, options);
}

VerificationReport verify_finite_uniqueness(const CoxeterMatrix& cm) {
  VerificationReport report;
  report.subject = "finite-uniqueness";
  const RootSlice slice = enumerate_all_roots(cm);
  const OrientedMatroid m = OrientedMatroid::realizable(slice);
  const GroupEnumeration group = enumerate_group(cm, 64);
  report.counts["positive_roots"] = static_cast<std::int64_t>(slice.class_count());
  report.counts["group"] = static_cast<std::int64_t>(group.elements.size());
  report.check("group_closed", "group enumeration terminates").record(group.closed, [] { return Witness{}; });

  const Rank2Structure structure(slice);
  TopeSet translates;
  std::set<TopalSet> inversions;
  auto& topal = report.check("translates_topal", "each translate of the positive system is a topal subset");
  auto& is_tope_check = report.check("translates_are_topes", "each translate of the positive system is a tope");
  auto& inv_check = report.check("inversion_sets", "inversion sets are biclosed with size equal to word length");
  for (const auto& g : group.elements) {
    const auto perm = element_permutation(slice, g.action);
    topal.record(perm.has_value(), [&] { return Witness{{"w", word_string(g.word)}}; });
    if (!perm) continue;
    ClassSet picks(slice.class_count());
    for (std::size_t k = 0; k < slice.class_count(); ++k) {
      if ((*perm)[2 * k] % 2 == 0) picks.set((*perm)[2 * k] / 2);
    }
    TopalSet r(picks);
    is_tope_check.record(is_tope(m, r), [&] { return Witness{{"w", word_string(g.word)}, {"set", r.to_string()}}; });
    translates.insert(r);
    const BiclosedSet inv = inversion_set(slice, g);
    inv_check.record(structure.is_biclosed(inv) && inv.count() == g.word.size(),
                     [&] { return Witness{{"w", word_string(g.word)}, {"inversions", class_list(inv)}}; });
    inversions.emplace(inv);
  }
  report.counts["translates"] = static_cast<std::int64_t>(translates.size());
  report.check("translates_distinct", "the translates are pairwise distinct")
      .record(translates.size() == group.elements.size(), [&] {
        return Witness{{"group", std::to_string(group.elements.size())}, {"distinct", std::to_string(translates.size())}};
      });

  const std::vector<BiclosedSet> biclosed = enumerate_biclosed(structure);
  report.counts["biclosed"] = static_cast<std::int64_t>(biclosed.size());
  report.check("biclosed_count", "the number of biclosed sets equals the group order")
      .record(biclosed.size() == group.elements.size(), [&] {
        return Witness{{"group", std::to_string(group.elements.size())}, {"biclosed", std::to_string(biclosed.size())}};
      });
  std::set<TopalSet> biclosed_set;
  for (const auto& b : biclosed) biclosed_set.emplace(b);
  report.check("biclosed_are_inversion_sets", "the biclosed sets are exactly the inversion sets")
      .record(biclosed_set == inversions, [] { return Witness{}; });

  const std::vector<TopalSet> topes = enumerate_topes(m);
  report.counts["topes"] = static_cast<std::int64_t>(topes.size());
  report.check("topes_are_translates", "the topes are exactly the translates of the positive system")
      .record(TopeSet(topes.begin(), topes.end()) == translates, [&] {
        return Witness{{"topes", std::to_string(topes.size())}, {"translates", std::to_string(translates.size())}};
      });
  const CleanReport clean = check_clean(slice, topes);
  report.counts["quasitopes"] = static_cast<std::int64_t>(clean.quasitopes);
  report.check("clean", "every quasitope is a tope and every tope is a quasitope").record(clean.clean(), [&] {
    Witness w;
    if (!clean.quasitope_not_tope.empty()) w["quasitope_not_tope"] = clean.quasitope_not_tope.front().to_string();
    if (!clean.tope_not_quasitope.empty()) w["tope_not_quasitope"] = clean.tope_not_quasitope.front().to_string();
    return w;
  });
  report.flags["unique"] = report.ok();
  return report;
}

VerificationReport simulate_induction(const RootSlice& slice, std::size_t n_max, const InductionOptions& options) {
  if (slice.dimension() != 3 || slice.span_rank() != 3) {
    throw std::invalid_argument("simulate_induction: slice must span dimension 3");
  }
  if (n_max > slice.class_count()) throw std::invalid_argument("simulate_induction: prefix longer than the slice");
  VerificationReport report;
  report.subject = "induction";
  auto& pencil = report.check("planar_prefix", "a prefix spanning a plane has 2n regions");
  auto& count = report.check("region_count", "flip search and incremental insertion agree on the region count");
  auto& enough = report.check("walls_at_least_3", "every region of a rank-3 prefix has at least 3 walls");
  auto& independent = report.check("three_wall_independent", "a region with 3 walls has independent wall normals");
  auto& section = report.check("cross_section", "a region with 4 or more walls admits a bounding cross-section");
  auto& not_wall = report.check("bn_not_wall_of_x", "the newest root is not a wall of X");
  auto& gallery = report.check("gallery_through_r", "the only minimal gallery from X to T passes through R");
  std::int64_t rank2 = 0, rank3 = 0, bordering = 0, three = 0, many = 0, retries = 0;

  for (std::size_t n = 1; n <= n_max; ++n) {
    const RootSlice prefix = slice.prefix(n);
    const OrientedMatroid m = OrientedMatroid::realizable(prefix);
    const std::vector<TopalSet> regions = enumerate_topes(m);
    if (prefix.span_rank() <= 2) {
      ++rank2;
      pencil.record(regions.size() == 2 * n, [&] {
        return Witness{{"prefix", std::to_string(n)}, {"regions", std::to_string(regions.size())}};
      });
      continue;
    }
    ++rank3;
    const std::size_t expected = count_regions_incremental(prefix);
    count.record(regions.size() == expected, [&] {
      return Witness{{"prefix", std::to_string(n)},
                     {"flip_search", std::to_string(regions.size())},
                     {"insertion", std::to_string(expected)}};
    });
    TopeSet family(regions.begin(), regions.end());
    if (options.tamper) options.tamper(n, family);
    const std::size_t bn = n - 1;
    for (const auto& r : family) {
      const ClassSet w = walls(m, r);
      if (!w.test(bn)) continue;
      ++bordering;
      auto where = [&](Witness extra = {}) {
        extra["prefix"] = std::to_string(n);
        extra["region"] = r.to_string();
        extra["walls"] = class_list(w);
        return extra;
      };
      const std::size_t k = w.count();
      enough.record(k >= 3, [&] { return where(); });
      if (k < 3) continue;
      if (k == 3) {
        ++three;
        const auto c = members(w);
        independent.record(!det3(prefix.vec(2 * c[0]), prefix.vec(2 * c[1]), prefix.vec(2 * c[2])).is_zero(),
                           [&] { return where(); });
        continue;
      }
      ++many;
      std::optional<CrossSection> cs;
      try {
        cs = make_cross_section(m, r, bn, options.retry_budget);
      } catch (const CrossSectionError& e) {
        section.record(false, [&] { return where({{"error", e.what()}}); });
        continue;
      }
      section.record(true, {});
      if (cs->attempts > 1) ++retries;
      const std::size_t bi = cs->sides[2];
      const TopalSet t = flip(r, bn);
      const TopalSet x = flip(r, bi);
      auto local = [&] { return where({{"b_i", "b" + std::to_string(bi + 1)}, {"X", x.to_string()}, {"T", t.to_string()}}); };
      not_wall.record(!family.count(flip(x, bn)), local);
      const auto g = minimal_gallery(family, x, t);
      gallery.record(g && g->size() == 3 && (*g)[1] == r && separation(x, t).count() == 2, local);
    }
  }
  report.counts["prefixes"] = static_cast<std::int64_t>(n_max);
  report.counts["prefixes_rank2"] = rank2;
  report.counts["prefixes_rank3"] = rank3;
  report.counts["regions_bordering_newest"] = bordering;
  report.counts["three_wall_regions"] = three;
  report.counts["many_wall_regions"] = many;
  report.counts["cross_section_retries"] = retries;
  return report;
}

VerificationReport check_triple_topes(const RootSlice& slice) {
  if (slice.dimension() != 3) throw std::invalid_argument("check_triple_topes: slice must have dimension 3");
  VerificationReport report;
  report.subject = "triple-topes";
  const OrientedMatroid m = OrientedMatroid::realizable(slice);
  auto& counts = report.check("triple_count", "a triple has 8 topes when independent and 6 when dependent");
  auto& cone = report.check("cone_exclusion", "the third root of a triple lies in the plane cone exactly when dependent");
  std::int64_t independent = 0, dependent = 0;
  const std::size_t c = slice.class_count();
  for (std::size_t a = 0; a < c; ++a) {
    for (std::size_t b = a + 1; b < c; ++b) {
      for (std::size_t d = b + 1; d < c; ++d) {
        const Vector &va = slice.vec(2 * a), &vb = slice.vec(2 * b), &vd = slice.vec(2 * d);
        if (is_zero(cross(va, vb)) || is_zero(cross(va, vd)) || is_zero(cross(vb, vd))) continue;
        const bool indep = !det3(va, vb, vd).is_zero();
        ++(indep ? independent : dependent);
        const std::size_t topes = enumerate_topes(restrict_to_classes(m, {a, b, d})).size();
        auto witness = [&] {
          return Witness{{"triple", "{b" + std::to_string(a + 1) + ",b" + std::to_string(b + 1) + ",b" +
                                        std::to_string(d + 1) + "}"},
                         {"independent", indep ? "true" : "false"},
                         {"topes", std::to_string(topes)}};
        };
        counts.record(topes == (indep ? 8u : 6u), witness);
        const ElementSet plane = m.singleton(2 * a) | m.singleton(2 * a + 1) | m.singleton(2 * b) | m.singleton(2 * b + 1);
        const ElementSet cl = m.closure(plane);
        cone.record((cl.test(2 * d) && cl.test(2 * d + 1)) == !indep && (cl.test(2 * d) == cl.test(2 * d + 1)), witness);
      }
    }
  }
  report.counts["triples"] = independent + dependent;
  report.counts["independent"] = independent;
  report.counts["dependent"] = dependent;
  return report;
}

VerificationReport compare_realizations(const CoxeterMatrix& a, const CoxeterMatrix& b, int depth,
                                        const CompareOptions& options) {
  if (a.rank != b.rank || a.m != b.m) throw std::invalid_argument("compare_realizations: Coxeter matrices differ");
  VerificationReport report;
  report.subject = "compare";
  const RootSlice sa = enumerate_roots(a, depth);
  const RootSlice sb = enumerate_roots(b, depth);
  report.counts["elements_a"] = static_cast<std::int64_t>(sa.size());
  report.counts["elements_b"] = static_cast<std::int64_t>(sb.size());

  auto& labels = report.check("labels", "both realizations carry the same canonical labels");
  std::vector<std::size_t> match(sa.size());
  try {
    const auto la = canonical_label(sa);
    const auto lb = canonical_label(sb);
    std::map<ReflectionLabel, std::size_t> index;
    for (std::size_t e = 0; e < lb.size(); ++e) index.emplace(lb[e], e);
    labels.record(sa.size() == sb.size(), [&] {
      return Witness{{"elements_a", std::to_string(sa.size())}, {"elements_b", std::to_string(sb.size())}};
    });
    for (std::size_t e = 0; e < la.size(); ++e) {
      const auto it = index.find(la[e]);
      labels.record(it != index.end() && it->second % 2 == e % 2, [&] { return Witness{{"label", la[e].to_string()}}; });
      if (it != index.end()) match[e] = it->second;
    }
  } catch (const LabelError& e) {
    labels.record(false, [&] { return Witness{{"error", e.what()}}; });
  }
  if (!labels.passed) {
    report.flags["equal"] = false;
    return report;
  }

  auto& transitions = report.check("transitions", "simple reflections act identically on the matched labels");
  const Matrix& fa = *sa.form();
  const Matrix& fb = *sb.form();
  for (std::size_t e = 0; e < sa.size(); ++e) {
    for (int s = 0; s < a.rank; ++s) {
      const auto ia = sa.find(reflect(fa, s, sa.vec(e)));
      const auto ib = sb.find(reflect(fb, s, sb.vec(match[e])));
      transitions.record(ia.has_value() == ib.has_value() && (!ia || match[*ia] == *ib), [&] {
        return Witness{{"element", "b" + std::to_string(e / 2 + 1)}, {"generator", std::to_string(s)}};
      });
    }
  }

  const OrientedMatroid ma = OrientedMatroid::realizable(sa);
  const OrientedMatroid mb = OrientedMatroid::realizable(sb);
  const std::vector<TopalSet> ta = enumerate_topes(ma);
  const std::vector<TopalSet> tb = enumerate_topes(mb);
  TopeSet mapped;
  for (const auto& t : tb) {
    ClassSet picks(sa.class_count());
    for (std::size_t k = 0; k < sa.class_count(); ++k) {
      if (t.positive(match[2 * k] / 2)) picks.set(k);
    }
    mapped.emplace(std::move(picks));
  }
  report.counts["topes_a"] = static_cast<std::int64_t>(ta.size());
  report.counts["topes_b"] = static_cast<std::int64_t>(tb.size());
  auto& topes = report.check("topes_equal", "the tope sets agree under the label matching");
  topes.record(ta.size() == tb.size(), [&] {
    return Witness{{"topes_a", std::to_string(ta.size())}, {"topes_b", std::to_string(tb.size())}};
  });
  for (const auto& t : ta) {
    topes.record(mapped.count(t) > 0, [&] { return Witness{{"only_in_a", t.to_string()}}; });
  }

  auto& closures = report.check("closures_equal", "closures agree on sampled subsets under the label matching");
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < options.samples; ++i) {
    const ElementSet x = random_subset(sa.size(), rng);
    closures.record(permute(match, ma.closure(x)) == mb.closure(permute(match, x)),
                    [&] { return Witness{{"set", set_string(x, ma.ground())}}; });
  }
  report.flags["equal"] = report.ok();
  return report;
}

}  // namespace omrs
