#include <doctest.h>

#include <limits>

#include "qbruhat/error.hpp"
#include "qbruhat/poly.hpp"

using namespace qbruhat;

namespace {
Poly x(int i) { return Poly::variable(Var::x, i); }
Poly y(int i) { return Poly::variable(Var::y, i); }
Poly q(int i) { return Poly::variable(Var::q, i); }
}  // namespace

TEST_CASE("arithmetic and text") {
  const Poly p = (x(1) + y(1)) * (x(1) - y(1));
  CHECK(p == x(1) * x(1) - y(1) * y(1));
  CHECK(p.to_string() == "x1^2 - y1^2");
  CHECK((q(1) * q(1) * q(2) * y(1)).to_string() == "q1^2*q2*y1");
  CHECK((3 * x(1) - 1).to_string() == "3*x1 - 1");
  CHECK(Poly().to_string() == "0");
  CHECK(Poly(1).to_string() == "1");
  CHECK((-x(2)).to_string() == "-x2");
}

TEST_CASE("no stored zeros") {
  const Poly p = x(1) + y(2) - x(1);
  CHECK(p.size() == 1);
  CHECK(p.coefficient(Monomial::variable(Var::x, 1)) == 0);
  CHECK((x(1) - x(1)).is_zero());
  CHECK((x(1) * 0).is_zero());
}

TEST_CASE("lex order puts x1 first") {
  const Poly p = x(2) * x(2) + x(1) + y(1) * y(1) * y(1);
  CHECK(p.leading_monomial() == Monomial::variable(Var::x, 1));
  CHECK(Monomial::variable(Var::x, 2, 5) < Monomial::variable(Var::x, 1));
  CHECK(Monomial::variable(Var::y, 1, 5) < Monomial::variable(Var::x, 3));
  CHECK(Monomial::variable(Var::q, 1, 5) < Monomial::variable(Var::y, 3));
}

TEST_CASE("overflow is detected") {
  const auto big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(big, 2), OverflowError);
  CHECK_THROWS_AS(Poly(big) + Poly(1), OverflowError);
  CHECK_THROWS_AS(Poly(big) * x(1) * 2, OverflowError);
  CHECK_THROWS_AS(Monomial::variable(Var::x, 1, 256), OverflowError);
  CHECK(checked_add(big - 1, 1) == big);
}

TEST_CASE("variable indices are bounded") {
  CHECK_THROWS(Poly::variable(Var::x, 0));
  CHECK_THROWS(Poly::variable(Var::x, kMaxN + 1));
}

TEST_CASE("exact division") {
  const Poly g = x(1) - x(2);
  const Poly f = (x(1) * x(1) + y(1) * x(2)) * g;
  CHECK(divide_exact(f, g) == x(1) * x(1) + y(1) * x(2));
  CHECK_THROWS_AS(divide_exact(x(1) + 1, g), InvariantViolation);
  CHECK_THROWS(divide_exact(x(1), Poly()));
}

TEST_CASE("divided differences") {
  CHECK(divided_difference(x(1), 1) == 1);
  CHECK(divided_difference(x(1) * x(1) * x(2), 1) == x(1) * x(2));
  CHECK(divided_difference(x(1) * x(1) * x(2), 2) == x(1) * x(1));
  CHECK(divided_difference(x(1) + x(2), 1).is_zero());
  CHECK(divided_difference(y(1), 1, Var::y) == 1);
  CHECK(divided_difference(y(1) * x(1), 1, Var::y) == x(1));
}

TEST_CASE("substitutions") {
  const Poly p = x(1) * y(2) + q(1);
  CHECK(p.swap_variables(Var::x, 1) == x(2) * y(2) + q(1));
  CHECK(p.set_zero(Var::q) == x(1) * y(2));
  CHECK((x(1) + x(2) * x(2)).rename(Var::x, Var::y) == y(1) + y(2) * y(2));
  CHECK(p.degree(Var::y, 2) == 1);
  CHECK(p.degree(Var::x, 3) == 0);
  CHECK((x(1) - 1).has_nonnegative_coefficients() == false);
  CHECK(p.has_nonnegative_coefficients());
}

TEST_CASE("monomial algebra") {
  const auto a = Monomial::variable(Var::x, 1, 2) * Monomial::variable(Var::q, 2);
  const auto b = Monomial::variable(Var::x, 1);
  CHECK(a.divisible_by(b));
  CHECK_FALSE(b.divisible_by(a));
  CHECK(a / b == Monomial::variable(Var::x, 1) * Monomial::variable(Var::q, 2));
  CHECK(a.degree() == 3);
  CHECK(a.block_degree(Var::q) == 1);
  CHECK(a.restrict_to(Var::q) == Monomial::variable(Var::q, 2));
  CHECK(a.without(Var::q) == Monomial::variable(Var::x, 1, 2));
}
