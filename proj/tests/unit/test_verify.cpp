#include <doctest.h>

#include <omrs/verify.hpp>

#include <memory>

using omrs::CoxeterMatrix;
using omrs::ElementSet;
using omrs::OrientedMatroid;
using omrs::Rational;
using omrs::TopalSet;

namespace {

bool has_witness(const omrs::VerificationReport& r, const std::string& check) {
  const auto* c = r.find(check);
  return c && !c->passed && !c->witnesses.empty();
}

// Finds, at prefix n of the slice, the first region bordering the newest
// root with at least 4 walls and returns X = flip(R, b_i) and T.
struct Local {
  TopalSet r, x, t;
};

std::optional<Local> first_local(const omrs::RootSlice& slice, std::size_t n, const omrs::TopeSet& family) {
  const auto m = OrientedMatroid::realizable(slice.prefix(n));
  for (const auto& r : family) {
    const auto w = omrs::walls(m, r);
    if (!w.test(n - 1) || w.count() < 4) continue;
    const auto cs = omrs::make_cross_section(m, r, n - 1);
    return Local{r, omrs::flip(r, cs.sides[2]), omrs::flip(r, n - 1)};
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("check results keep a bounded number of witnesses") {
  omrs::CheckResult c;
  for (int i = 0; i < 9; ++i) c.record(i % 2 == 0, [i] { return omrs::Witness{{"i", std::to_string(i)}}; });
  CHECK_FALSE(c.passed);
  CHECK(c.cases == 9);
  CHECK(c.witnesses.size() == 4);
  for (int i = 0; i < 9; ++i) c.record(false, [] { return omrs::Witness{}; });
  CHECK(c.witnesses.size() == omrs::CheckResult::kMaxWitnesses);

  omrs::VerificationReport r;
  r.check("a").record(true, {});
  CHECK(r.ok());
  r.check("b").fail({{"why", "x"}});
  CHECK_FALSE(r.ok());
  CHECK(r.find("b")->cases == 0);
  CHECK(&r.check("a") == r.find("a"));
  omrs::VerificationReport outer;
  outer.merge(r, "inner.");
  CHECK(outer.find("inner.b") != nullptr);
}

TEST_CASE("finite uniqueness replay") {
  const std::vector<std::pair<std::string, std::int64_t>> cases{
      {"A2", 6}, {"B2", 8}, {"G2", 12}, {"I2(5)", 10}, {"A3", 24}, {"B3", 48}};
  for (const auto& [name, order] : cases) {
    CAPTURE(name);
    const auto r = omrs::verify_finite_uniqueness(CoxeterMatrix::named(name));
    CHECK(r.ok());
    CHECK(r.flags.at("unique"));
    CHECK(r.counts.at("group") == order);
    CHECK(r.counts.at("biclosed") == order);
    CHECK(r.counts.at("topes") == order);
    CHECK(r.counts.at("translates") == order);
    CHECK(r.counts.at("quasitopes") == order);
  }
}

TEST_CASE("axioms of an oriented matroid root system") {
  const auto cm = CoxeterMatrix::named("B3");
  const auto m = OrientedMatroid::realizable(omrs::enumerate_all_roots(cm));
  const auto group = omrs::enumerate_group(cm, 64).elements;
  const auto r = omrs::check_omrs_axioms(m, group, {500, 3, {}});
  CHECK(r.ok());
  CHECK(r.counts.at("group_elements_used") == 48);

  // On a truncation only slice-preserving elements are used.
  const auto acm = CoxeterMatrix::named("A2~");
  const auto am = OrientedMatroid::realizable(omrs::enumerate_roots(acm, 4));
  const auto ar = omrs::check_omrs_axioms(am, omrs::enumerate_group(acm, 4).elements, {300, 3, {}});
  CHECK(ar.ok());
  CHECK(ar.counts.at("group_elements_used") == 1);
}

TEST_CASE("a closure that is not equivariant is caught") {
  const auto cm = CoxeterMatrix::named("B3");
  const auto slice = std::make_shared<const omrs::RootSlice>(omrs::enumerate_all_roots(cm));
  const auto honest = OrientedMatroid::realizable(slice);
  ElementSet simple(slice->size());
  simple.set(0).set(2).set(4);
  // Drops the highest root from the closure of the simple roots only.
  auto oracle = std::make_shared<omrs::FunctionClosure>(slice->size(), [=](const ElementSet& x) {
    ElementSet c = honest.closure(x);
    if (x == simple) c.reset(slice->size() - 2);
    return c;
  });
  const OrientedMatroid doctored(omrs::GroundSet(slice->class_count()), oracle, slice);
  const auto r = omrs::check_omrs_axioms(doctored, *slice, omrs::enumerate_group(cm, 64).elements,
                                         {0, 1, {simple}});
  CHECK_FALSE(r.ok());
  CHECK(has_witness(r, "equivariance"));
  CHECK(r.find("positive_closed")->passed);
  CHECK(r.find("rank2_cone")->passed);
  CHECK(r.find("equivariance")->witnesses[0].count("w") == 1);
}

TEST_CASE("a closure that disagrees on a plane is caught") {
  const auto slice = std::make_shared<const omrs::RootSlice>(omrs::enumerate_all_roots(CoxeterMatrix::named("B2")));
  // Plain span closure inside the B2 plane: any two independent roots
  // generate everything.
  auto oracle = std::make_shared<omrs::FunctionClosure>(slice->size(), [=](const ElementSet& x) {
    return omrs::classes_of(x).count() >= 2 ? ElementSet(x.size()).set() : omrs::cone_closure(*slice, x);
  });
  const OrientedMatroid doctored(omrs::GroundSet(slice->class_count()), oracle, slice);
  const auto r = omrs::check_omrs_axioms(doctored, *slice, {}, {100, 1, {}});
  CHECK(has_witness(r, "rank2_cone"));
  CHECK(has_witness(r, "positive_closed"));
}

TEST_CASE("rank-3 induction replay") {
  for (const auto& [name, depth] : std::vector<std::pair<std::string, int>>{{"A3", 0}, {"B3", 0}, {"A2~", 6}}) {
    CAPTURE(name);
    const auto cm = CoxeterMatrix::named(name);
    const auto s = depth ? omrs::enumerate_roots(cm, depth) : omrs::enumerate_all_roots(cm);
    const auto r = omrs::simulate_induction(s, s.class_count());
    CHECK(r.ok());
    CHECK(r.counts.at("prefixes") == static_cast<std::int64_t>(s.class_count()));
    CHECK(r.counts.at("prefixes_rank2") == 2);
    CHECK(r.find("region_count")->cases == s.class_count() - 2);
  }
  const auto a2 = omrs::enumerate_all_roots(CoxeterMatrix::named("A2"));
  CHECK_THROWS_AS(omrs::simulate_induction(a2, 3), std::invalid_argument);
}

TEST_CASE("tampered region families fail the local checks") {
  const auto s = omrs::enumerate_roots(CoxeterMatrix::named("A2~"), 6);
  std::size_t target = 0;
  std::optional<Local> local;
  for (std::size_t n = 4; n <= s.class_count() && !local; ++n) {
    const auto regions = omrs::enumerate_topes(OrientedMatroid::realizable(s.prefix(n)));
    local = first_local(s, n, omrs::TopeSet(regions.begin(), regions.end()));
    target = n;
  }
  REQUIRE(local.has_value());

  omrs::InductionOptions drop_x;
  drop_x.tamper = [&](std::size_t n, omrs::TopeSet& family) {
    if (n == target) family.erase(local->x);
  };
  const auto r1 = omrs::simulate_induction(s, target, drop_x);
  CHECK_FALSE(r1.ok());
  REQUIRE(has_witness(r1, "gallery_through_r"));
  const auto& w = r1.find("gallery_through_r")->witnesses[0];
  CHECK(w.at("prefix") == std::to_string(target));
  CHECK(w.at("region") == local->r.to_string());
  CHECK(w.at("X") == local->x.to_string());

  omrs::InductionOptions add_fake;
  add_fake.tamper = [&](std::size_t n, omrs::TopeSet& family) {
    if (n == target) family.insert(omrs::flip(local->x, target - 1));
  };
  const auto r2 = omrs::simulate_induction(s, target, add_fake);
  CHECK(has_witness(r2, "bn_not_wall_of_x"));
}

TEST_CASE("triple restriction counts") {
  const auto r = omrs::check_triple_topes(omrs::enumerate_all_roots(CoxeterMatrix::named("A3")));
  CHECK(r.ok());
  // 20 triples of the 6 positive roots; the 4 coplanar ones are the
  // rank-2 parabolic A2 subsystems, one per plane.
  CHECK(r.counts.at("triples") == 20);
  CHECK(r.counts.at("dependent") == 4);
  CHECK(r.counts.at("independent") == 16);
}

TEST_CASE("realization comparison") {
  auto a = CoxeterMatrix::named("(3,3,inf)");
  auto b = a;
  b.set_bond(0, 2, Rational(-5, 4));
  const auto r = omrs::compare_realizations(a, b, 4, {200, 5});
  CHECK(r.ok());
  CHECK(r.flags.at("equal"));
  CHECK(r.counts.at("topes_a") == 378);
  CHECK(r.counts.at("topes_b") == 378);
  CHECK_THROWS_AS(omrs::compare_realizations(a, CoxeterMatrix::named("A2~"), 4), std::invalid_argument);
}

TEST_CASE("random subsets are reproducible") {
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 50; ++i) CHECK(omrs::random_subset(30, a) == omrs::random_subset(30, b));
}

TEST_CASE("cross-sections bound the region") {
  const auto s = omrs::enumerate_roots(CoxeterMatrix::named("C2~"), 5);
  const auto m = OrientedMatroid::realizable(s);
  std::size_t sliced = 0;
  for (const auto& r : omrs::enumerate_topes(m)) {
    const auto w = omrs::walls(m, r);
    if (w.count() < 3) continue;
    const auto cs = omrs::make_cross_section(m, r, w.find_first());
    ++sliced;
    const std::size_t n = cs.side_count();
    CHECK(n == w.count());
    CHECK(cs.sides[0] == w.find_first());
    CHECK(cs.side_of(cs.sides[1]) == std::optional<std::size_t>{1});
    omrs::Vector centre(3);
    for (const auto& v : cs.vertices) centre = centre + v;
    centre = omrs::FieldElement(Rational(1, static_cast<long>(n))) * centre;
    for (std::size_t k = 0; k < n; ++k) {
      const auto& a = cs.vertices[k];
      const auto& b = cs.vertices[(k + 1) % n];
      CHECK(omrs::dot(a, cs.u) == omrs::FieldElement(1));
      // Side k lies on the hyperplane of its class.
      CHECK(omrs::dot(a, s.vec(2 * cs.sides[k])).is_zero());
      CHECK(omrs::dot(b, s.vec(2 * cs.sides[k])).is_zero());
      // Counterclockwise seen from u.
      CHECK(omrs::det3(a - centre, b - centre, cs.u).sign() > 0);
    }
    // The vertex average is inside R: every root of R is positive there.
    for (std::size_t c = 0; c < s.class_count(); ++c) CHECK(omrs::dot(centre, s.vec(r.element(c))).sign() > 0);
  }
  CHECK(sliced > 50);

  const auto a2 = OrientedMatroid::realizable(omrs::enumerate_all_roots(CoxeterMatrix::named("A2")));
  CHECK_THROWS_AS(omrs::make_cross_section(a2, TopalSet::all_positive(3)), omrs::CrossSectionError);
  const auto b3 = OrientedMatroid::realizable(omrs::enumerate_all_roots(CoxeterMatrix::named("B3")));
  CHECK_THROWS_AS(omrs::make_cross_section(b3, TopalSet::all_positive(9), 8), omrs::CrossSectionError);
}
