#include <doctest.h>

#include "testing.hpp"
#include "weylreps/error.hpp"
#include "weylreps/text_format.hpp"

using namespace weylreps;
using namespace weylreps::testing;

TEST_SUITE("text_format") {
  TEST_CASE("element round trip") {
    const auto x = add(scale(kExpI, WeylElement::generator(Rational(1, 2), -3)), WeylElement::generator(0, 1));
    const auto text = serialize_element(x);
    const auto back = parse_element(text);
    CHECK(max_coefficient_deviation(x, back) == 0.0);
  }

  TEST_CASE("element syntax") {
    const auto x = parse_element(R"(
      # U_1 V_1
      [{a: "1", b: "1", re: 1, im: 0},
       {a: 2, b: "-1/2", re: 0.5}]
    )");
    CHECK(x.size() == 2);
    CHECK(x.coefficient({2, Rational(-1, 2)}) == Complex(0.5, 0.0));
    CHECK(parse_element("").is_zero());
    CHECK(parse_element("{a: 1, b: 1, re: 1} {a: 1, b: 1, re: 2}").coefficient({1, 1}) == Complex(3.0, 0.0));
  }

  TEST_CASE("parse errors carry line and column") {
    try {
      parse_element("{a: \"1\", b: \"1\", re: 1}\n{a: \"1/0\", b: \"1\", re: 1}");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() > 1);
    }
    CHECK_THROWS_AS(parse_element("{a: 1, b: 1, re: }"), ParseError);
    CHECK_THROWS_AS(parse_element("{a: 1, re: 1}"), ParseError);
    CHECK_THROWS_AS(parse_element("{a: 1, b: 1, re: 1"), ParseError);
    CHECK_THROWS_AS(parse_element("{a: 1, b: 1, re: abc}"), ParseError);
    CHECK_THROWS_AS(parse_element("{a: 1, b: 1, re: 1, zz: 2}"), ParseError);
  }

  TEST_CASE("doubles print shortest round trip") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(0.1) == "0.1");
    CHECK(std::stod(format_double(kExpI.real())) == kExpI.real());
  }

  TEST_CASE("states") {
    CHECK(parse_state("position:3/2") == position_state(Rational(3, 2)));
    CHECK(parse_state("momentum:-1") == momentum_state(-1));
    CHECK(parse_state("vacuum") == vacuum_state());
    CHECK(parse_state(R"({kind: "position", lambda: "1/3"})") == position_state(Rational(1, 3)));
    CHECK(parse_state(R"({kind: "momentum", mu: "2"})") == momentum_state(2));
    CHECK(parse_state(serialize_state(momentum_state(Rational(-5, 7)))) == momentum_state(Rational(-5, 7)));
    CHECK_THROWS(parse_state("bogus:1"));
    CHECK_THROWS(parse_state("position"));
    CHECK_THROWS(parse_state("position:x"));
  }

  TEST_CASE("support vectors") {
    const auto v = parse_support_vector(R"({point: "1/2", re: 1, im: 0, flavor: "momentum"})");
    CHECK(v.flavor() == Flavor::Momentum);
    CHECK(v.amplitude(Rational(1, 2)) == Complex(1.0, 0.0));
    const auto back = parse_support_vector(serialize_support_vector(v));
    CHECK(max_amplitude_deviation(v, back) == 0.0);
    CHECK_THROWS(parse_support_vector(
        R"({point: 0, re: 1, flavor: "momentum"} {point: 1, re: 1, flavor: "position"})"));
  }

  TEST_CASE("polynomials") {
    const auto f = parse_polynomial(R"({freq: "0", re: 2} {freq: "1/2", re: 5} {freq: "-3", re: 0, im: -1})");
    CHECK(invariant_mean(f) == Complex(2.0, 0.0));
    CHECK(f.coefficient(-3) == Complex(0.0, -1.0));
    const auto back = parse_polynomial(serialize_polynomial(f));
    CHECK(back.coefficients() == f.coefficients());
  }

  TEST_CASE("rational lists") {
    const auto grid = parse_rational_list("0,1/8,-1/64");
    REQUIRE(grid.size() == 3);
    CHECK(grid[2] == Rational(-1, 64));
    CHECK_THROWS_AS(parse_rational_list("1,,2"), InvalidArgument);
    CHECK_THROWS_AS(parse_rational_list(""), InvalidArgument);
  }
}
