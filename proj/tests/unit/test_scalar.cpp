#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "axtk/scalar.hpp"

using axtk::Scalar;
using axtk::frac;

TEST_CASE("rational construction and arithmetic") {
  Scalar a(3, 4);
  Scalar b(1, 2);
  CHECK(a + b == frac(5, 4));
  CHECK(a - b == frac(1, 4));
  CHECK(a * b == frac(3, 8));
  CHECK(a / b == frac(3, 2));
  CHECK((-a) == frac(-3, 4));
  CHECK(a.inv() == frac(4, 3));
  CHECK(Scalar(0).is_zero());
  CHECK(Scalar(1).is_one());
  CHECK(frac(2, 4) == frac(1, 2));
  CHECK(frac(-1, -2) == frac(1, 2));
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), axtk::ArithmeticError);
  CHECK_THROWS_AS(Scalar(0).inv(), axtk::ArithmeticError);
}

TEST_CASE("comparison and sign of rationals") {
  CHECK(frac(1, 3) < frac(1, 2));
  CHECK(frac(-5, 2).sgn() == -1);
  CHECK(frac(5, 2).sgn() == 1);
  CHECK(Scalar(0).sgn() == 0);
}

TEST_CASE("parse round trip") {
  CHECK(Scalar::parse("3/4") == frac(3, 4));
  CHECK(Scalar::parse("-7") == Scalar(-7));
  CHECK(Scalar::parse("0") == Scalar(0));
  CHECK(Scalar::parse(frac(-22, 7).str()) == frac(-22, 7));
  CHECK_THROWS_AS(Scalar::parse("1/0"), axtk::ParseError);
  CHECK_THROWS_AS(Scalar::parse("banana"), axtk::ParseError);
  CHECK_THROWS_AS(Scalar::parse(""), axtk::ParseError);
}

TEST_CASE("quadratic extension arithmetic") {
  // w^2 = w + 1 (golden-ratio field): w^2 - w - 1 = 0, so c1 = -1, c0 = -1.
  auto f = axtk::make_quad_field(-1, -1);
  Scalar w = Scalar::omega(f);
  CHECK(w * w == w + Scalar(1));
  CHECK((w * w - w - Scalar(1)).is_zero());
  Scalar u = w + Scalar(2);     // w + 2
  Scalar v = u * u;             // w^2 + 4w + 4 = 5w + 5... no: (w+2)^2 = w^2+4w+4 = 5w+5
  CHECK(v == 5 * w + Scalar(5));
  // Inverse: (a + bw)(a + bw)^{-1} = 1.
  CHECK((u * u.inv()).is_one());
  CHECK(u.inv() * u == Scalar(1, 1));
  // Norm-based inverse stays in the field.
  CHECK(u.inv().field() != nullptr);
}

TEST_CASE("extension parse and str round trip") {
  auto f = axtk::make_quad_field(0, -5);  // w^2 = 5
  Scalar w = Scalar::omega(f);
  Scalar x = frac(1, 2) + frac(3, 7) * w;
  CHECK(Scalar::parse(x.str(), f) == x);
  CHECK((w * w) == Scalar(5));
}

TEST_CASE("reducible quadratic is rejected") {
  // w^2 = 4 factors as (w-2)(w+2).
  CHECK_THROWS_AS(axtk::make_quad_field(0, -4), axtk::Error);
  // w^2 - w = w(w-1).
  CHECK_THROWS_AS(axtk::make_quad_field(-1, 0), axtk::Error);
}

TEST_CASE("mixed field operations throw") {
  auto f = axtk::make_quad_field(0, -5);
  auto g = axtk::make_quad_field(0, -3);
  Scalar a = Scalar::omega(f);
  Scalar b = Scalar::omega(g);
  CHECK_THROWS_AS(a + b, axtk::ArithmeticError);
  // Rationals embed in any field.
  CHECK((a + Scalar(1)) - a == Scalar(1));
}

TEST_CASE("rational accessors") {
  Scalar a = frac(9, 12);
  CHECK(a.is_rational());
  CHECK(a.as_rational() == mpq_class(3, 4));
  auto f = axtk::make_quad_field(0, -5);
  Scalar w = Scalar::omega(f);
  CHECK_FALSE(w.is_rational());
  CHECK_THROWS_AS(w.as_rational(), axtk::ArithmeticError);
  CHECK(w.rat_part() == 0);
  CHECK(w.ext_part() == 1);
}
