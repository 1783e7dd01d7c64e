#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "snakedimer/errors.hpp"
#include "snakedimer/laurent.hpp"
#include "snakedimer/matrix.hpp"

using namespace snakedimer;

TEST_CASE("indeterminates intern by name") {
  Indeterminate q1("q"), q2("q"), t("t");
  CHECK(q1 == q2);
  CHECK(q1.id() == q2.id());
  CHECK(q1.id() != t.id());
  CHECK(q1.name() == "q");
}

TEST_CASE("ring arithmetic") {
  Indeterminate q("q");
  LaurentPoly x = LaurentPoly::variable(q);
  LaurentPoly p = (x + 1) * (x + 1);
  CHECK(p == x * x + 2 * x + LaurentPoly(1));
  CHECK((p - p).is_zero());
  CHECK(p.sum_of_coefficients() == 4);

  LaurentPoly inv = LaurentPoly::variable(q, -1);
  CHECK(x * inv == LaurentPoly(1));
  CHECK(inv == x.inverse());
  CHECK(x.pow(0) == LaurentPoly(1));
  CHECK(x.pow(-2) == LaurentPoly::variable(q, -2));
  CHECK_THROWS_AS((x + 1).inverse(), ValidationError);
  CHECK_THROWS_AS((2 * x).inverse(), ValidationError);
}

TEST_CASE("associativity, commutativity, distributivity on sample values") {
  Indeterminate q("q"), t("t");
  LaurentPoly a = LaurentPoly::variable(q, -1) + 2;
  LaurentPoly b = LaurentPoly::variable(t) * 3 - 1;
  LaurentPoly c = LaurentPoly::variable(q) * LaurentPoly::variable(t, -2) + 5;
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * b == b * a);
  CHECK(a * (b + c) == a * b + a * c);
}

TEST_CASE("substitution") {
  Indeterminate q("q"), t("t");
  LaurentPoly x = LaurentPoly::variable(q);
  LaurentPoly p = x.pow(2) + x.inverse();
  CHECK(p.substitute(q, LaurentPoly(1)).constant_value() == 2);
  CHECK(p.substitute(q, LaurentPoly::variable(q, -1)) == x.pow(-2) + x);
  CHECK(p.substitute(t, LaurentPoly(7)) == p);
  // Substituting a non-invertible value into a negative power fails.
  CHECK_THROWS_AS(p.substitute(q, x + 1), ValidationError);
  // ...but works when only nonnegative powers occur.
  CHECK(x.pow(2).substitute(q, x + 1) == x * x + 2 * x + LaurentPoly(1));
}

TEST_CASE("text form: total degree then lexicographic") {
  Indeterminate q("q");
  LaurentPoly x = LaurentPoly::variable(q);
  LaurentPoly p = x.pow(-4) + 2 * x.pow(-3) + 2 * x.pow(-2) + x.pow(-1) + 1 + x;
  CHECK(p.str() == "q^-4 + 2*q^-3 + 2*q^-2 + q^-1 + 1 + q");
  CHECK(LaurentPoly(0).str() == "0");
  CHECK(LaurentPoly(-3).str() == "-3");
  CHECK((x - 1).str() == "-1 + q");

  Indeterminate a0("a0"), a1("a1"), b1("b1"), c1("c1");
  LaurentPoly v0 = LaurentPoly::variable(a0), v1 = LaurentPoly::variable(a1);
  LaurentPoly w1 = LaurentPoly::variable(b1), u1 = LaurentPoly::variable(c1);
  LaurentPoly m = v0.pow(2) * v1.pow(3) + v0 * v1.pow(2) * w1 * u1 + v1 * w1.pow(2) * u1.pow(2);
  CHECK(m.str() == "a0^2*a1^3 + a0*a1^2*b1*c1 + a1*b1^2*c1^2");
  // Numeric suffixes sort naturally: a2 before a10.
  Indeterminate a2("a2"), a10("a10");
  LaurentPoly s = LaurentPoly::variable(a10) + LaurentPoly::variable(a2);
  CHECK(s.str() == "a2 + a10");
}

TEST_CASE("univariate views") {
  Indeterminate q("q"), t("t");
  LaurentPoly x = LaurentPoly::variable(q);
  LaurentPoly p = 3 * x.pow(2) + x.pow(-1);
  CHECK(p.is_univariate_in(q));
  CHECK_FALSE((p + LaurentPoly::variable(t)).is_univariate_in(q));
  auto coeffs = p.univariate_coefficients(q);
  CHECK(coeffs.size() == 2);
  CHECK(coeffs.at(2) == 3);
  CHECK(coeffs.at(-1) == 1);
  CHECK(p.min_degree_in(q) == -1);
  CHECK(LaurentPoly(5).min_degree_in(q) == 0);
}

TEST_CASE("matrix basics") {
  LaurentMatrix a = LaurentMatrix::from_table({{1, 1}, {1, 0}});
  LaurentMatrix i2 = LaurentMatrix::identity(2);
  CHECK(a * i2 == a);
  CHECK(i2 * a == a);
  LaurentMatrix a2 = a * a;
  CHECK(a2 == LaurentMatrix::from_table({{2, 1}, {1, 1}}));
  CHECK(a2.is_integer());
  CHECK(a2.str() == "[[2,1],[1,1]]");
  CHECK_THROWS_AS(a * LaurentMatrix::identity(3), ValidationError);
  CHECK_THROWS_AS(a.at(3, 1), ValidationError);

  LaurentMatrix b(2, 3);
  Indeterminate q("q");
  b.at(1, 1) = LaurentPoly::variable(q);
  CHECK_FALSE(b.is_integer());
  LaurentMatrix ones = b.map([&](const LaurentPoly& p) {
    return p.substitute(q, LaurentPoly(1));
  });
  CHECK(ones.is_integer());
}
