#include <doctest.h>

#include <unordered_set>

#include "weylreps/error.hpp"
#include "weylreps/rational.hpp"

using weylreps::InvalidArgument;
using weylreps::Rational;

TEST_SUITE("rational") {
  TEST_CASE("values are kept in lowest terms") {
    CHECK(Rational(6, 8).str() == "3/4");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1) / Rational(4) == Rational(1, 4));
    CHECK(-Rational(1, 7) < Rational(0));
  }

  TEST_CASE("parse accepts integers and fractions") {
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("1/8") == Rational(1, 8));
    CHECK(Rational::parse("-1/64") == Rational(-1, 64));
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("123456789012345678901234567890/3").str() == "41152263004115226300411522630");
  }

  TEST_CASE("parse rejects malformed text") {
    for (const char* bad : {"", "/", "1/", "/2", "1/0", "a", "1.5", " 1", "1 ", "--1", "1/-2", "+", "1//2"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(Rational::parse(bad), InvalidArgument);
    }
  }

  TEST_CASE("zero denominators and division by zero throw") {
    CHECK_THROWS_AS(Rational(1, 0), InvalidArgument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidArgument);
  }

  TEST_CASE("equal values hash equally") {
    std::unordered_set<Rational> set{Rational(1, 2), Rational(2, 4), Rational(-1, 2)};
    CHECK(set.size() == 2);
  }

  TEST_CASE("phase of zero is exactly one") {
    CHECK(weylreps::phase(Rational(0)) == weylreps::Complex(1.0, 0.0));
    CHECK(std::abs(std::abs(weylreps::phase(Rational(7, 3))) - 1.0) < 1e-15);
  }
}
