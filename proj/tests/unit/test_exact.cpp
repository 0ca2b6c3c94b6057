#include <doctest.h>

#include <omrs/exact.hpp>

#include <cmath>
#include <random>

using omrs::FieldElement;
using omrs::Matrix;
using omrs::Rational;
using omrs::Vector;

namespace {

FieldElement q(long p, long r = 1) { return FieldElement(Rational(p, r)); }
FieldElement sq(int n) { return FieldElement::sqrt_of(n); }

}  // namespace

TEST_CASE("square roots multiply into the basis") {
  CHECK(sq(2) * sq(2) == q(2));
  CHECK(sq(2) * sq(3) == sq(6));
  CHECK(sq(6) * sq(10) == q(2) * sq(15));
  CHECK(sq(30) * sq(30) == q(30));
  CHECK(sq(5) * sq(6) == sq(30));
  CHECK(sq(2).coefficient(1) == 1);
  CHECK(sq(6).coefficient(4) == 1);
  CHECK_THROWS_AS(FieldElement::sqrt_of(7), std::invalid_argument);
}

TEST_CASE("field operations round-trip") {
  const FieldElement a = q(1, 3) + q(2) * sq(2) - sq(15);
  const FieldElement b = q(-3, 4) + sq(5) + q(1, 2) * sq(6) + sq(30);
  CHECK((a + b) - b == a);
  CHECK((a * b) / b == a);
  CHECK(a * a.inverse() == q(1));
  CHECK(b.inverse().inverse() == b);
  CHECK(-(-a) == a);
  CHECK((a - a).is_zero());
  CHECK_THROWS(FieldElement().inverse());
}

TEST_CASE("from_string reads rationals") {
  CHECK(FieldElement::from_string("-3/2") == q(-3, 2));
  CHECK(FieldElement::from_string("6/4") == q(3, 2));
  CHECK(FieldElement::from_string("7").rational_value() == 7);
  CHECK_THROWS_AS(FieldElement::from_string("x"), std::invalid_argument);
}

TEST_CASE("sign matches floating point away from zero") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-20, 20);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    FieldElement x;
    const int basis[8] = {1, 2, 3, 5, 6, 10, 15, 30};
    for (int n : basis) {
      const FieldElement c = q(coeff(rng), 1 + (coeff(rng) + 20) % 7);
      x += n == 1 ? c : c * sq(n);
    }
    const double d = x.to_double();
    if (std::fabs(d) < 1e-6) continue;
    CHECK(x.sign() == (d > 0 ? 1 : -1));
    ++checked;
  }
  CHECK(checked > 400);
}

TEST_CASE("sign decides near-cancellations") {
  // 5 - 2 sqrt6 = (sqrt3 - sqrt2)^2 > 0, and its conjugate is positive too.
  CHECK((q(5) - q(2) * sq(6)).sign() == 1);
  // (1 + sqrt5)/2 squared minus its value minus one is exactly zero.
  const FieldElement phi = q(1, 2) * (q(1) + sq(5));
  CHECK((phi * phi - phi - q(1)).is_zero());
  // sqrt2 + sqrt3 vs sqrt10 (3.1462... vs 3.1622...).
  CHECK((sq(2) + sq(3) - sq(10)).sign() == -1);
  // 49 - 20 sqrt6 is about 0.0102.
  CHECK((q(49) - q(20) * sq(6)).sign() == 1);
  // 198 sqrt6 - 485 is about -0.0010.
  CHECK((q(198) * sq(6) - q(485)).sign() == -1);
  CHECK(omrs::compare(sq(3), q(173205, 100000)) == 1);
}

TEST_CASE("vector helpers") {
  const Vector a{q(1), q(0), q(0)};
  const Vector b{q(0), q(1), q(0)};
  CHECK(omrs::cross(a, b) == Vector{q(0), q(0), q(1)});
  CHECK(omrs::det3(a, b, omrs::cross(a, b)) == q(1));
  CHECK(omrs::det2({q(1), q(2)}, {q(3), q(4)}) == q(-2));
  CHECK(omrs::normalize_ray({q(-2), q(4), q(0)}) == Vector{q(-1), q(2), q(0)});
  CHECK(omrs::normalize_ray({q(0), q(3) * sq(2), q(1)}) == Vector{q(0), q(1), q(1, 3) * sq(2) * q(1, 2)});
}

TEST_CASE("rank and solve") {
  const Matrix m = Matrix::from_columns({{q(1), q(0), q(1)}, {q(0), q(1), q(1)}, {q(1), q(1), q(2)}});
  CHECK(omrs::rank(m) == 2);
  const auto x = omrs::solve_linear(m, {q(2), q(3), q(5)});
  REQUIRE(x.has_value());
  CHECK(m * *x == Vector{q(2), q(3), q(5)});
  CHECK_FALSE(omrs::solve_linear(m, {q(1), q(0), q(0)}).has_value());
  const Matrix r = Matrix::from_columns({{sq(2), q(1)}, {q(1), sq(2)}});
  CHECK(omrs::rank(r) == 2);
}
