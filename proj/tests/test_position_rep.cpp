#include <doctest.h>

#include "testing.hpp"
#include "weylreps/error.hpp"
#include "weylreps/position_rep.hpp"
#include "weylreps/sampling.hpp"

using namespace weylreps;
using namespace weylreps::testing;

namespace {

FiniteSupportVector phi(const Rational& x) { return FiniteSupportVector::basis(x); }
FiniteSupportVector mom(const Rational& x) { return FiniteSupportVector::basis(x, Flavor::Momentum); }

}  // namespace

TEST_SUITE("position_rep") {
  TEST_CASE("basis vectors are orthonormal") {
    CHECK(inner(phi(1), phi(2)) == Complex{});
    CHECK(inner(phi(Rational(1, 3)), phi(Rational(1, 3))) == Complex(1.0, 0.0));
    const auto v = add(phi(0), scale({0.0, 1.0}, phi(1)));
    CHECK(inner(v, phi(1)) == Complex(0.0, -1.0));
    CHECK(v.norm() == doctest::Approx(std::sqrt(2.0)));
  }

  TEST_CASE("mixing flavors is refused") {
    CHECK_THROWS_AS(inner(phi(0), mom(0)), FlavorMismatch);
    CHECK_THROWS_AS(add(phi(0), mom(0)), FlavorMismatch);
  }

  TEST_CASE("U acts diagonally in the position model") {
    const auto v = add(phi(0), phi(1));
    CHECK(max_amplitude_deviation(apply_U(0, v), v) == 0.0);
    const auto u = apply_U(2, phi(3));
    REQUIRE(u.amplitudes().size() == 1);
    CHECK(near(u.amplitude(3), kExp6I));
    const auto w = apply_U(1, v);
    CHECK(w.amplitude(0) == Complex(1.0, 0.0));
    CHECK(near(w.amplitude(1), kExpI));
  }

  TEST_CASE("V translates in the position model") {
    const auto v = add(phi(Rational(1, 2)), scale(3.0, phi(-4)));
    CHECK(max_amplitude_deviation(apply_V(0, v), v) == 0.0);
    const auto shifted = apply_V(1, phi(3));
    CHECK(shifted.amplitude(2) == Complex(1.0, 0.0));
    CHECK(shifted.amplitude(3) == Complex{});
    CHECK(max_amplitude_deviation(apply_V(-1, apply_V(1, v)), v) == 0.0);
  }

  TEST_CASE("momentum model mirrors the position model") {
    const Complex e3i{-0.98999249660044545727, 0.14112000805986722210};
    CHECK(near(apply_V(3, mom(1)).amplitude(1), e3i));
    CHECK(apply_U(2, mom(1)).amplitude(3) == Complex(1.0, 0.0));
  }

  TEST_CASE("Weyl relation on basis vectors") {
    CHECK(weyl_relation_check(1, 1, 0) < 1e-12);
    CHECK(weyl_relation_check(Rational(7, 3), 0, 5) == 0.0);
    Sampler sampler(5);
    for (int k = 0; k < 100; ++k) {
      const Rational a = sampler.rational(10);
      const Rational b = sampler.rational(10);
      const Rational x = sampler.rational(10);
      CHECK(weyl_relation_check(a, b, x, Flavor::Position) < 1e-12);
      CHECK(weyl_relation_check(a, b, x, Flavor::Momentum) < 1e-12);
    }
  }

  TEST_CASE("position and momentum operators") {
    CHECK(apply_Q(phi(3)).amplitude(3) == Complex(3.0, 0.0));
    CHECK(apply_Q(phi(0)).is_zero());
    CHECK(apply_P(mom(Rational(-1, 2))).amplitude(Rational(-1, 2)) == Complex(-0.5, 0.0));
    CHECK_THROWS_WITH_AS(apply_Q(mom(1)), doctest::Contains("nonexistent observable"), NonexistentObservable);
    CHECK_THROWS_AS(apply_P(phi(1)), NonexistentObservable);
  }

  TEST_CASE("finite-difference generator") {
    const auto fd = finite_difference_generator(Rational(1, 1024), phi(1));
    const Complex expected{0.99999984105428817808, 0.00048828121119489396};
    CHECK(near(fd.amplitude(1), expected));
    CHECK(max_amplitude_deviation(fd, apply_Q(phi(1))) <= 1.0 / 1024.0);
    CHECK(finite_difference_generator(Rational(1, 1024), phi(0)).is_zero());
    CHECK_THROWS_AS(finite_difference_generator(0, phi(1)), InvalidArgument);

    double previous = max_amplitude_deviation(finite_difference_generator(Rational(1, 8), phi(1)), apply_Q(phi(1)));
    for (long d = 16; d <= 1024; d *= 2) {
      const double error = max_amplitude_deviation(finite_difference_generator(Rational(1, d), phi(1)), apply_Q(phi(1)));
      CHECK(error / previous == doctest::Approx(0.5).epsilon(0.1));
      previous = error;
    }
  }

  TEST_CASE("V-direction matrix element is an indicator") {
    CHECK(v_direction_matrix_element(0, 5) == Complex(1.0, 0.0));
    CHECK(v_direction_matrix_element(Rational(1, 1000000), 5) == Complex{});
    CHECK(v_direction_matrix_element(-2, 0) == Complex{});
    CHECK(u_direction_matrix_element(0, 2) == Complex(1.0, 0.0));
    CHECK(u_direction_matrix_element(Rational(1, 1000000), 2) == Complex{});
  }

  TEST_CASE("algebra elements act term by term") {
    const auto x = add(WeylElement::generator(1, 0), WeylElement::generator(0, 1));
    const auto v = apply(x, phi(2));
    CHECK(near(v.amplitude(2), {std::cos(2.0), std::sin(2.0)}));
    CHECK(v.amplitude(1) == Complex(1.0, 0.0));
  }
}
