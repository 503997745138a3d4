#include <stdexcept>

#include <doctest.h>

#include "genlog/rational.hpp"

using namespace genlog;

TEST_CASE("rationals are kept canonical") {
  CHECK(Rational(4, 10).to_string() == "2/5");
  CHECK(Rational(1, -2).to_string() == "-1/2");
  CHECK(Rational(-3, -6).to_string() == "1/2");
  CHECK(Rational(0, 7).to_string() == "0/1");
  CHECK(Rational(5).to_string() == "5/1");
  CHECK(Rational().is_zero());
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic and comparisons are exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK(Rational(-1, 2).is_negative());

  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(3, 4) > Rational(2, 3));
  CHECK(Rational(1, 2) != Rational(1, 3));

  Rational accum(0);
  accum += Rational(1, 4);
  accum *= Rational(2);
  CHECK(accum == Rational(1, 2));
}

TEST_CASE("parse accepts fractions, integers, and decimal strings") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("9/10") == Rational(9, 10));
  CHECK(Rational::parse("10") == Rational(10));
  CHECK(Rational::parse("-2") == Rational(-2));
  CHECK(Rational::parse("+3") == Rational(3));
  CHECK(Rational::parse("0.4") == Rational(2, 5));
  // Leading zeros in the digit string must read as decimal, never octal.
  CHECK(Rational::parse("0.9") == Rational(9, 10));
  CHECK(Rational::parse("0.09") == Rational(9, 100));
  CHECK(Rational::parse("007") == Rational(7));
  CHECK(Rational::parse("1.25") == Rational(5, 4));
  CHECK(Rational::parse("-0.5") == Rational(-1, 2));
  CHECK(Rational::parse("0.0") == Rational(0));
  CHECK(Rational::parse(".5") == Rational(1, 2));
}

TEST_CASE("parse rejects everything else") {
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1."), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1e5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(" 1"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1 "), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("--1"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
}

TEST_CASE("powers by squaring") {
  CHECK(Rational::pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(Rational::pow(Rational(2, 3), 0) == Rational(1));
  CHECK(Rational::pow(Rational(0), 5) == Rational(0));
  CHECK(Rational::pow(Rational(-1, 2), 2) == Rational(1, 4));
}

TEST_CASE("display helpers") {
  CHECK(Rational(3, 4).to_double() == 0.75);
  CHECK(Rational(1).to_double() == 1.0);
}
