#include <doctest.h>

#include "logbott/errors.hpp"
#include "logbott/rational.hpp"

using namespace logbott;

TEST_CASE("parse_rational accepts integers and fractions") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational(" -7/2 ") == Rational(-7, 2));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(parse_rational("+5") == 5);
  CHECK(parse_rational("123456789012345678901234567890/3") ==
        Rational(Integer("41152263004115226300411522630")));
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
  CHECK_THROWS_AS(parse_rational("1/-2"), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK_THROWS_AS(parse_rational("2/"), InputError);
}

TEST_CASE("to_string prints p/q and bare integers") {
  CHECK(to_string(Rational(3)) == "3");
  CHECK(to_string(Rational(-1, 2)) == "-1/2");
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("binomial and power") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(40, 20) == Rational(Integer("137846528820")));
  CHECK(power(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK(power(Rational(5), 0) == 1);
}
