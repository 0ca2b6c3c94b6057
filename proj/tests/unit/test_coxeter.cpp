#include <doctest.h>

#include <omrs/coxeter.hpp>

#include <map>
#include <set>

#include "float_oracles.hpp"

using omrs::CoxeterMatrix;
using omrs::FieldElement;
using omrs::Rational;

namespace {

// Exact roots must match the floating-point BFS ray for ray and depth for
// depth.
void check_against_oracle(const CoxeterMatrix& cm, int depth) {
  const omrs::RootSlice slice = omrs::enumerate_roots(cm, depth);
  const auto reference = oracle::positive_roots(cm, depth);
  REQUIRE(slice.class_count() == reference.size());
  for (std::size_t k = 0; k < slice.class_count(); ++k) {
    std::vector<double> v;
    for (const auto& x : slice.vec(2 * k)) v.push_back(x.to_double());
    const auto r = oracle::ray(v);
    bool matched = false;
    for (const auto& f : reference) {
      if (oracle::same(oracle::ray(f.v), r)) {
        matched = true;
        CHECK(f.depth == slice.root(2 * k).depth);
      }
    }
    CHECK(matched);
  }
}

std::map<int, int> depth_profile(const omrs::RootSlice& slice) {
  std::map<int, int> out;
  for (std::size_t k = 0; k < slice.class_count(); ++k) ++out[slice.root(2 * k).depth];
  return out;
}

}  // namespace

TEST_CASE("finite positive root counts") {
  const std::map<std::string, std::size_t> expected{{"A1xA1", 2}, {"A2", 3},  {"B2", 4},  {"I2(5)", 5},
                                                    {"G2", 6},    {"A3", 6},  {"B3", 9},  {"H3", 15},
                                                    {"G2xA1", 7}, {"A1xA1xA1", 3}};
  for (const auto& [name, count] : expected) {
    CAPTURE(name);
    const auto cm = CoxeterMatrix::named(name);
    CHECK(omrs::is_finite_type(cm));
    CHECK(omrs::enumerate_all_roots(cm).class_count() == count);
    check_against_oracle(cm, 20);
  }
}

TEST_CASE("affine and hyperbolic truncations agree with the float oracle") {
  for (const char* name : {"A2~", "C2~", "G2~", "universal3", "(3,3,inf)", "I2(inf)"}) {
    CAPTURE(name);
    const auto cm = CoxeterMatrix::named(name);
    CHECK_FALSE(omrs::is_finite_type(cm));
    check_against_oracle(cm, 6);
  }
  auto cm = CoxeterMatrix::named("(3,3,inf)");
  cm.set_bond(0, 2, Rational(-5, 4));
  check_against_oracle(cm, 6);
}

TEST_CASE("truncation sizes by depth") {
  // Frozen from the float oracle above.
  CHECK(depth_profile(omrs::enumerate_roots(CoxeterMatrix::named("A2~"), 6)) ==
        std::map<int, int>{{1, 3}, {2, 3}, {3, 3}, {4, 3}, {5, 3}, {6, 3}});
  CHECK(omrs::enumerate_roots(CoxeterMatrix::named("A2~"), 8).class_count() == 24);
  CHECK(omrs::enumerate_roots(CoxeterMatrix::named("C2~"), 8).class_count() == 27);
  CHECK(omrs::enumerate_roots(CoxeterMatrix::named("G2~"), 8).class_count() == 26);
  CHECK(omrs::enumerate_roots(CoxeterMatrix::named("universal3"), 6).class_count() == 189);
  CHECK(omrs::enumerate_roots(CoxeterMatrix::named("I2(inf)"), 5).class_count() == 10);
}

TEST_CASE("positive system ordering") {
  const auto slice = omrs::enumerate_all_roots(CoxeterMatrix::named("B3"));
  for (std::size_t k = 1; k < slice.class_count(); ++k) {
    CHECK(slice.root(2 * k - 2).depth <= slice.root(2 * k).depth);
  }
  for (std::size_t e = 0; e < slice.size(); ++e) {
    CHECK(slice.root(e).positive == (e % 2 == 0));
    CHECK(slice.vec(e) == -slice.vec(e ^ 1));
  }
  // Simple roots first, in generator order.
  CHECK(slice.vec(0) == omrs::Vector{1, 0, 0});
  CHECK(slice.vec(2) == omrs::Vector{0, 1, 0});
  CHECK(slice.vec(4) == omrs::Vector{0, 0, 1});
}

TEST_CASE("reflections are involutions preserving the form") {
  const auto cm = CoxeterMatrix::named("H3");
  const auto b = omrs::bilinear_form(cm);
  for (int s = 0; s < 3; ++s) {
    const auto r = omrs::reflection_matrix(b, s);
    CHECK(r * r == omrs::Matrix::identity(3));
    CHECK(r.transpose() * b * r == b);
  }
  CHECK(omrs::minus_cos_pi_over(5) * omrs::minus_cos_pi_over(5) ==
        FieldElement(Rational(3, 8)) + FieldElement(Rational(1, 8)) * FieldElement::sqrt_of(5));
}

TEST_CASE("group orders match the float oracle") {
  const std::map<std::string, std::size_t> expected{{"A2", 6},  {"B2", 8},  {"I2(5)", 10}, {"G2", 12},
                                                    {"A3", 24}, {"B3", 48}, {"H3", 120}};
  for (const auto& [name, order] : expected) {
    CAPTURE(name);
    const auto cm = CoxeterMatrix::named(name);
    CHECK(oracle::group_order(cm) == order);
    const auto g = omrs::enumerate_group(cm, 64);
    CHECK(g.closed);
    CHECK(g.elements.size() == order);
  }
  const auto aff = omrs::enumerate_group(CoxeterMatrix::named("A2~"), 3);
  CHECK_FALSE(aff.closed);
  // 3n elements of each length n >= 1.
  CHECK(aff.elements.size() == 1 + 3 + 6 + 9);
}

TEST_CASE("canonical labels are distinct and follow parents") {
  const auto slice = omrs::enumerate_roots(CoxeterMatrix::named("C2~"), 6);
  const auto labels = omrs::canonical_label(slice);
  std::set<omrs::ReflectionLabel> distinct(labels.begin(), labels.end());
  CHECK(distinct.size() == slice.size());
  const auto b = *slice.form();
  for (std::size_t e = 0; e < slice.size(); e += 2) {
    CHECK(labels[e].sign == 1);
    CHECK(labels[e + 1].sign == -1);
    CHECK(labels[e].word.size() + 1 == static_cast<std::size_t>(slice.root(e).depth));
    // Applying the word to the generator's simple root gives the root back.
    omrs::Vector v(3);
    v[labels[e].generator] = 1;
    for (auto it = labels[e].word.rbegin(); it != labels[e].word.rend(); ++it) v = omrs::reflect(b, *it, v);
    CHECK(omrs::normalize_ray(v) == slice.vec(e));
  }
  const auto a2 = omrs::canonical_label(omrs::enumerate_all_roots(CoxeterMatrix::named("A2")));
  CHECK(a2[0].to_string() == "+[](a0)");
  CHECK(a2[5].to_string() == "-[s0](a1)");
}

TEST_CASE("validation lists every problem") {
  auto cm = CoxeterMatrix::from_entries({{1, 3, 7}, {3, 2, 3}, {4, 3, 1}});
  cm.set_bond(0, 1, Rational(-2));
  const auto errors = cm.validation_errors();
  CHECK(errors.size() == 4);
  CHECK(std::count(errors.begin(), errors.end(), "m[1][1] must be 1") == 1);
  CHECK(std::count(errors.begin(), errors.end(), "m[0][2] must be one of 2, 3, 4, 5, 6, inf") == 1);
  CHECK(std::count(errors.begin(), errors.end(), "matrix is not symmetric: m[0][2] != m[2][0]") == 1);
  CHECK(std::count(errors.begin(), errors.end(), "bond parameter given for finite bond m[0][1]") == 1);

  auto loose = CoxeterMatrix::named("universal3");
  loose.set_bond(1, 2, Rational(-1, 2));
  CHECK(loose.validation_errors() == std::vector<std::string>{"bond parameter must be <= -1 for m[1][2] (got -1/2)"});
  CHECK_THROWS_AS(loose.validate(), std::invalid_argument);
  CHECK(CoxeterMatrix::from_entries({{1}}).validation_errors() == std::vector<std::string>{"rank must be 2 or 3"});
  CHECK_THROWS_AS(CoxeterMatrix::named("E8"), std::invalid_argument);
}

TEST_CASE("element permutations") {
  const auto cm = CoxeterMatrix::named("A3");
  const auto slice = omrs::enumerate_all_roots(cm);
  const auto b = omrs::bilinear_form(cm);
  for (int s = 0; s < 3; ++s) {
    const auto perm = omrs::element_permutation(slice, omrs::reflection_matrix(b, s));
    REQUIRE(perm.has_value());
    // s sends a_s to -a_s and permutes the other positive roots.
    CHECK((*perm)[2 * s] == 2 * s + 1);
    std::size_t flipped = 0;
    for (std::size_t e = 0; e < slice.size(); e += 2) flipped += (*perm)[e] % 2;
    CHECK(flipped == 1);
  }
  const auto aff = omrs::enumerate_roots(CoxeterMatrix::named("A2~"), 2);
  const auto ab = *aff.form();
  CHECK_FALSE(omrs::element_permutation(aff, omrs::reflection_matrix(ab, 0)).has_value());
}
