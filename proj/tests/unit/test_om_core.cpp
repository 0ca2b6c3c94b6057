#include <doctest.h>

#include <omrs/coxeter.hpp>
#include <omrs/oriented_matroid.hpp>

#include <memory>
#include <random>

using omrs::CoxeterMatrix;
using omrs::ElementSet;
using omrs::OrientedMatroid;

namespace {

OrientedMatroid realizable(const std::string& name, int depth = 0) {
  const auto cm = CoxeterMatrix::named(name);
  return OrientedMatroid::realizable(depth > 0 ? omrs::enumerate_roots(cm, depth) : omrs::enumerate_all_roots(cm));
}

ElementSet set_of(std::size_t n, std::initializer_list<std::size_t> elems) {
  ElementSet x(n);
  for (auto e : elems) x.set(e);
  return x;
}

}  // namespace

TEST_CASE("star and classes") {
  const ElementSet x = set_of(6, {0, 3});
  CHECK(omrs::star_of(x) == set_of(6, {1, 2}));
  CHECK(omrs::classes_of(x) == ElementSet(3, 0b011));
  CHECK_FALSE(omrs::is_star_closed(x));
  CHECK(omrs::is_star_closed(set_of(6, {2, 3})));
  CHECK(omrs::members(x) == std::vector<std::size_t>{0, 3});
  const omrs::GroundSet g(2);
  CHECK(omrs::format_set(set_of(4, {0, 3}), g.names()) == "{b1, -b2}");
}

TEST_CASE("cone closure on A2") {
  const auto m = realizable("A2");
  // Classes: a0, a1, a0 + a1.
  const std::size_t n = m.size();
  CHECK(m.loops().none());
  CHECK(m.closure(set_of(n, {0, 2})) == set_of(n, {0, 2, 4}));
  CHECK(m.closure(set_of(n, {0, 3})) == set_of(n, {0, 3}));
  CHECK(m.closure(set_of(n, {0, 1})) == set_of(n, {0, 1}));
  // a0 and -(a0 + a1) give -a1.
  CHECK(m.closure(set_of(n, {0, 5})) == set_of(n, {0, 3, 5}));
  CHECK(m.closure(set_of(n, {0, 2, 5})) == m.full_set());
  CHECK(m.is_closed(set_of(n, {0, 2, 4})));
}

TEST_CASE("sign-table closure equals Caratheodory closure") {
  std::mt19937_64 rng(11);
  for (const auto& [name, depth] : std::vector<std::pair<std::string, int>>{
           {"G2", 0}, {"B3", 0}, {"H3", 0}, {"A2~", 5}, {"C2~", 5}, {"universal3", 3}, {"I2(inf)", 6}}) {
    CAPTURE(name);
    const auto m = realizable(name, depth);
    const auto& slice = *m.realization();
    for (int trial = 0; trial < 300; ++trial) {
      ElementSet x(m.size());
      const std::size_t k = rng() % 5;
      for (std::size_t j = 0; j < k; ++j) x.set(rng() % m.size());
      CHECK(m.closure(x) == omrs::cone_closure(slice, x));
    }
  }
}

TEST_CASE("closure axioms hold exhaustively on small slices") {
  for (const char* name : {"A1xA1", "A2", "B2", "I2(5)", "A1xA1xA1"}) {
    CAPTURE(name);
    const auto m = realizable(name);
    CHECK(m.class_count() <= 5);
    const auto report = omrs::check_axioms(m);
    CHECK(report.exhaustive);
    CHECK(report.subsets_checked == (std::size_t{1} << m.size()));
    CHECK(report.ok());
  }
}

TEST_CASE("closure axioms hold on sampled subsets of larger slices") {
  omrs::AxiomCheckOptions opts;
  opts.exhaustive_limit = 0;
  opts.random_samples = 2000;
  for (const auto& [name, depth] : std::vector<std::pair<std::string, int>>{{"A3", 0}, {"H3", 0}, {"G2~", 4}}) {
    CAPTURE(name);
    const auto report = omrs::check_axioms(realizable(name, depth), opts);
    CHECK_FALSE(report.exhaustive);
    CHECK(report.subsets_checked == 2000);
    CHECK(report.ok());
  }
}

TEST_CASE("axiom checker reports broken closures") {
  // Anything nonempty closes to everything: (2) fails on a singleton.
  const auto greedy = OrientedMatroid::synthetic(2, [](const ElementSet& x) {
    return x.none() ? x : ElementSet(x.size()).set();
  });
  const auto r1 = omrs::check_axioms(greedy);
  CHECK_FALSE(r1.ok());
  CHECK_FALSE(r1.passed("axiom2"));
  CHECK(r1.passed("extensive"));
  CHECK(r1.passed("idempotent"));

  // Adding element 0 to nonempty sets does not commute with *.
  const auto lopsided = OrientedMatroid::synthetic(2, [](const ElementSet& x) {
    ElementSet y = x;
    if (x.any()) y.set(0);
    return y;
  });
  const auto r2 = omrs::check_axioms(lopsided);
  CHECK_FALSE(r2.passed("axiom1"));
  REQUIRE_FALSE(r2.failures.empty());
  CHECK(r2.failures[0].describe(lopsided.ground()).find("axiom") != std::string::npos);

  // Not extensive.
  const auto shrinking = OrientedMatroid::synthetic(2, [](const ElementSet& x) { return ElementSet(x.size()); });
  CHECK_FALSE(omrs::check_axioms(shrinking).passed("extensive"));
}

TEST_CASE("from_vectors, reduce and restrict") {
  using omrs::Vector;
  // e1, 2 e1 (parallel), e2, e1 + e2 in the plane.
  const auto m = OrientedMatroid::from_vectors({Vector{1, 0}, Vector{2, 0}, Vector{0, 1}, Vector{1, 1}});
  CHECK(m.class_count() == 4);
  CHECK(m.closure(set_of(8, {0})) == set_of(8, {0, 2}));
  const auto red = omrs::reduce(m);
  CHECK(red.reduced.class_count() == 3);
  CHECK(red.quotient[0] == red.quotient[2]);
  CHECK(red.quotient[1] == red.quotient[3]);
  CHECK(*red.quotient[0] != *red.quotient[1]);

  const auto a2 = realizable("A2");
  // Dropping a0 + a1 leaves two independent classes: nothing generated.
  const auto sub = omrs::restrict_to_classes(a2, {0, 1});
  CHECK(sub.class_count() == 2);
  CHECK(sub.closure(set_of(4, {0, 2})) == set_of(4, {0, 2}));
  CHECK_THROWS_AS(omrs::restrict(a2, set_of(6, {0})), std::invalid_argument);
  // Restriction keeps the matroid an oriented matroid.
  CHECK(omrs::check_axioms(sub).ok());
}

TEST_CASE("loops") {
  using omrs::Vector;
  const auto m = OrientedMatroid::from_vectors({Vector{0, 0}, Vector{1, 0}});
  CHECK(m.loops() == set_of(4, {0, 1}));
  const auto mr = omrs::reduce(m);
  CHECK(mr.reduced.size() == 2);
  CHECK_FALSE(mr.quotient[0].has_value());
  CHECK(mr.quotient[2] == std::optional<std::size_t>{0});
  CHECK(mr.quotient[3] == std::optional<std::size_t>{1});
  // Synthetic ground {x, x*, y, y*} with cx(empty) = {y, y*}.
  const auto loopy = OrientedMatroid::synthetic(2, [](const ElementSet& x) {
    ElementSet c = x;
    c.set(2).set(3);
    return c;
  });
  const auto red = omrs::reduce(loopy);
  CHECK(red.reduced.size() == 2);
  CHECK(red.quotient[0] == std::optional<std::size_t>{0});
  CHECK_FALSE(red.quotient[2].has_value());
  CHECK_FALSE(red.quotient[3].has_value());
}

TEST_CASE("restrictions") {
  const auto a3 = realizable("A3");
  CHECK(omrs::restrict(a3, a3.full_set()).closure(set_of(12, {0, 2})) == a3.closure(set_of(12, {0, 2})));
  CHECK(omrs::restrict(a3, a3.empty_set()).size() == 0);
  // The A2 parabolic on generators 0 and 1 is spanned by classes 0, 1 and
  // the class of a0 + a1.
  const auto& s = *a3.realization();
  const auto sum = s.find(omrs::Vector{1, 1, 0});
  REQUIRE(sum.has_value());
  const auto sub = omrs::restrict_to_classes(a3, {0, 1, *sum / 2});
  const auto direct = OrientedMatroid::from_vectors({omrs::Vector{1, 0, 0}, omrs::Vector{0, 1, 0}, omrs::Vector{1, 1, 0}});
  for (std::uint64_t bits = 0; bits < 64; ++bits) {
    const ElementSet x(6, bits);
    CHECK(sub.closure(x) == direct.closure(x));
  }
}

TEST_CASE("slice lookups") {
  const auto slice = omrs::enumerate_all_roots(CoxeterMatrix::named("B2"));
  using omrs::FieldElement;
  CHECK(slice.find(omrs::Vector{3, 0}) == std::optional<std::size_t>{0});
  CHECK(slice.find(omrs::Vector{0, -1}) == std::optional<std::size_t>{3});
  CHECK_FALSE(slice.find(omrs::Vector{1, 3}).has_value());
  CHECK(slice.span_rank() == 2);
  CHECK(slice.prefix(2).class_count() == 2);
  CHECK(slice.subslice({3, 0}).vec(0) == slice.vec(6));
  CHECK_THROWS(omrs::RootSlice(2, {omrs::Vector{1, 0}, omrs::Vector{2, 0}}, {1, 1}));
  CHECK_THROWS(omrs::RootSlice(2, {omrs::Vector{1, -1}}, {1}));
}
