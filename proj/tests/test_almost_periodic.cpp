#include <doctest.h>

#include <vector>

#include "testing.hpp"
#include "weylreps/almost_periodic.hpp"
#include "weylreps/error.hpp"
#include "weylreps/sampling.hpp"

using namespace weylreps;
using namespace weylreps::testing;

namespace {

TrigPolynomial u(const Rational& a) { return TrigPolynomial::character(a); }
TrigPolynomial one() { return TrigPolynomial::constant(1.0); }

}  // namespace

TEST_SUITE("almost_periodic") {
  TEST_CASE("character algebra") {
    const auto p = trig_multiply(u(1), u(-1));
    REQUIRE(p.coefficients().size() == 1);
    CHECK(p.coefficient(0) == Complex(1.0, 0.0));

    const auto c = trig_conjugate(u(Rational(3, 2)));
    REQUIRE(c.coefficients().size() == 1);
    CHECK(c.coefficient(Rational(-3, 2)) == Complex(1.0, 0.0));

    const auto q = trig_multiply(trig_add(one(), u(1)), trig_add(one(), u(-1)));
    CHECK(q.coefficients().size() == 3);
    CHECK(q.coefficient(0) == Complex(2.0, 0.0));
    CHECK(q.coefficient(1) == Complex(1.0, 0.0));
    CHECK(q.coefficient(-1) == Complex(1.0, 0.0));
  }

  TEST_CASE("invariant mean") {
    CHECK(invariant_mean(u(Rational(1, 1000))) == Complex{});
    CHECK(invariant_mean(TrigPolynomial::constant(3.0)) == Complex(3.0, 0.0));
    const auto f = trig_add(trig_add(TrigPolynomial::constant(2.0), trig_scale(5.0, u(Rational(1, 2)))),
                            trig_scale({0.0, -1.0}, u(-3)));
    CHECK(invariant_mean(f) == Complex(2.0, 0.0));
    CHECK(invariant_mean(TrigPolynomial{}) == Complex{});
  }

  TEST_CASE("translation invariance is exact") {
    Sampler sampler(19);
    for (int k = 0; k < 20; ++k) {
      const auto f = sampler.polynomial(5, 6);
      CHECK(invariant_mean(translate(f, sampler.rational(50))) == invariant_mean(f));
    }
  }

  TEST_CASE("point evaluation") {
    CHECK(evaluate_at(u(Rational(7, 5)), 0) == Complex(1.0, 0.0));
    CHECK(near(evaluate_at(u(2), 3), kExp6I));
    Sampler sampler(23);
    for (int k = 0; k < 20; ++k) {
      const auto f = sampler.polynomial(3, 4);
      const auto g = sampler.polynomial(3, 4);
      const Rational x = sampler.rational(10);
      CHECK(near(evaluate_at(trig_multiply(f, g), x), evaluate_at(f, x) * evaluate_at(g, x), 1e-12));
    }
  }

  TEST_CASE("sup-norm brackets") {
    const auto b1 = sup_norm_bounds(u(Rational(2, 3)));
    CHECK(b1.lower == doctest::Approx(1.0));
    CHECK(b1.upper == doctest::Approx(1.0));
    const auto b2 = sup_norm_bounds(TrigPolynomial::constant({0.0, -2.5}));
    CHECK(b2.lower == doctest::Approx(2.5));
    CHECK(b2.upper == doctest::Approx(2.5));
    const auto b3 = sup_norm_bounds(trig_add(one(), u(1)));
    CHECK(b3.lower >= 1.99);
    CHECK(b3.upper == doctest::Approx(2.0));
  }

  TEST_CASE("Haar Fourier coefficients") {
    CHECK(haar_fourier(0) == Complex(1.0, 0.0));
    CHECK(haar_fourier(1) == Complex{});
    CHECK(haar_fourier(Rational(-7, 3)) == Complex{});
  }

  TEST_CASE("Haar witness") {
    const std::vector<Rational> zero{0};
    const auto w0 = haar_fourier_witness(0, zero);
    CHECK(w0.exact_match);
    CHECK(w0.probes.at(0).momentum_transform == Complex(1.0, 0.0));

    const std::vector<Rational> probes{1, Rational(1, 2), -3};
    const auto w = haar_fourier_witness(0, probes);
    CHECK(w.exact_match);
    for (const auto& p : w.probes) CHECK(p.momentum_transform == Complex{});

    Sampler sampler(29);
    std::vector<Rational> random;
    for (int k = 0; k < 50; ++k) random.push_back(sampler.nonzero_rational(10));
    CHECK(haar_fourier_witness(Rational(5, 2), random).exact_match);

    CHECK_THROWS_AS(haar_fourier_witness(0, std::vector<Rational>{}), InvalidArgument);
  }
}
