#include <doctest.h>

#include "generators.hpp"
#include "logbott/errors.hpp"
#include "logbott/polynomial.hpp"

using namespace logbott;

namespace {
const std::vector<std::string> kXYZ{"x", "y", "z"};
Polynomial P(std::string_view s) { return parse_polynomial(s, kXYZ); }
}  // namespace

TEST_CASE("monomial helpers") {
  CHECK(total_degree({2, 0, 1}) == 3);
  CHECK(divides({1, 0, 1}, {2, 1, 1}));
  CHECK_FALSE(divides({0, 2, 0}, {2, 1, 1}));
  CHECK(monomial_product({1, 2, 0}, {0, 1, 3}) == Monomial{1, 3, 3});
  CHECK(monomial_quotient({2, 1, 1}, {1, 0, 1}) == Monomial{1, 1, 0});
  CHECK(monomial_lcm({2, 0, 1}, {1, 3, 0}) == Monomial{2, 3, 1});
}

TEST_CASE("parsing and printing") {
  const Polynomial p = P("3/2*x^2*y - y + 7");
  CHECK(p.coefficient({2, 1, 0}) == Rational(3, 2));
  CHECK(p.coefficient({0, 1, 0}) == -1);
  CHECK(p.constant_term() == 7);
  CHECK(p.total_degree() == 3);
  CHECK(P(p.to_string(kXYZ)) == p);
  CHECK(P("(x + y)^2") == P("x^2 + 2*x*y + y^2"));
  CHECK(P("x - x").is_zero());
  CHECK(P("0").total_degree() == -1);
  CHECK_THROWS_AS(P("w + 1"), InputError);
  CHECK_THROWS_AS(P("x +"), InputError);
  CHECK_THROWS_AS(P("x^-1"), InputError);
}

TEST_CASE("arithmetic, evaluation and restriction") {
  const Polynomial p = P("x*y + z"), q = P("x - 2");
  CHECK(p * q == P("x^2*y - 2*x*y + x*z - 2*z"));
  const std::vector<Rational> pt{2, 3, Rational(1, 2)};
  CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
  const std::vector<std::size_t> vars{2};
  CHECK(p.restrict_to_zero(vars) == P("x*y"));
  CHECK(P("x^3*y").derivative(0) == P("3*x^2*y"));
  CHECK(P("2").is_constant());
  Polynomial bad(2);
  CHECK_THROWS_AS(bad + p, InputError);
  CHECK_THROWS_AS(bad.add_term({1}, 1), InputError);
}

TEST_CASE("property: ring laws, Leibniz rule and evaluation homomorphism") {
  testing::Gen gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial a = gen.polynomial(3, 3), b = gen.polynomial(3, 3), c = gen.polynomial(3, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Polynomial(3));
    for (std::size_t v = 0; v < 3; ++v) CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
    const std::vector<Rational> pt{gen.rational(), gen.rational(), gen.rational()};
    CHECK((a + b * c).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt) * c.evaluate(pt));
    CHECK(a.pow(3) == a * a * a);
  }
}
