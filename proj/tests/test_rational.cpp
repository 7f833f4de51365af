#include <catch2/catch_amalgamated.hpp>

#include "ballops/rational.hpp"

using namespace ballops;

TEST_CASE("rationals stay canonical") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
  CHECK((Rational(1, 2) * Rational(2, 3)).str() == "1/3");
  CHECK((Rational(7) / Rational(7)).str() == "1");
}

TEST_CASE("parsing accepts p/q, integers, and exact decimals") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-6/8") == Rational(-3, 4));
  CHECK(Rational::parse("42") == Rational(42));
  CHECK(Rational::parse("0.5") == Rational(1, 2));
  CHECK(Rational::parse("-1.25") == Rational(-5, 4));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK(Rational::parse("0.1") == Rational(1, 10));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("abc"), Error);
  CHECK_THROWS_AS(Rational::parse(""), Error);
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("comparisons are exact") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(max(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
  CHECK(abs(Rational(-7, 2)) == Rational(7, 2));
  CHECK(pow2_inverse(4) == Rational(1, 16));
}

TEST_CASE("decimal rendering truncates deterministically") {
  CHECK(Rational(1, 2).decimal(3) == "0.5");
  CHECK(Rational(-1, 3).decimal(4) == "-0.3333");
  CHECK(Rational(5).decimal(2) == "5.0");
  CHECK(Rational(1, 7).decimal(6) == "0.142857");
}

TEST_CASE("parsing accepts explicit plus signs") {
  CHECK(Rational::parse("+5") == Rational(5));
  CHECK(Rational::parse("+3/4") == Rational(3, 4));
  CHECK(Rational::parse("+0.5") == Rational(1, 2));
}
