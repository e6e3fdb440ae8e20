#include <doctest.h>

#include <vector>

#include "testing.hpp"
#include "weylreps/error.hpp"
#include "weylreps/sampling.hpp"
#include "weylreps/states.hpp"

using namespace weylreps;
using namespace weylreps::testing;

namespace {

WeylElement W(const Rational& a, const Rational& b) { return WeylElement::generator(a, b); }

}  // namespace

TEST_SUITE("states") {
  TEST_CASE("position state") {
    const auto omega = position_state(1);
    CHECK(near(omega.evaluate(W(2, 0)), kExp2I));
    CHECK(omega.evaluate(W(0, 1)) == Complex{});
    CHECK(omega.evaluate(WeylElement::identity()) == Complex(1.0, 0.0));
    CHECK(omega.evaluate(W(5, Rational(1, 1000000))) == Complex{});
  }

  TEST_CASE("momentum state") {
    const auto omega = momentum_state(1);
    const Complex e3i{-0.98999249660044545727, 0.14112000805986722210};
    CHECK(near(omega.evaluate(W(0, 3)), e3i));
    CHECK(omega.evaluate(W(1, 0)) == Complex{});
    CHECK(omega.evaluate(WeylElement::identity()) == Complex(1.0, 0.0));
  }

  TEST_CASE("vacuum state against closed-form oracle values") {
    const auto omega = vacuum_state();
    CHECK(omega.evaluate(WeylElement::identity()) == Complex(1.0, 0.0));
    CHECK(near(omega.evaluate(W(2, 0)), {kExpMinus1, 0.0}));
    CHECK(near(omega.evaluate(W(1, 1)), kVacuum11));
    CHECK(near(omega.evaluate(W(0, Rational(1, 2))), {kExpMinusSixteenth, 0.0}));
  }

  TEST_CASE("evaluation is linear") {
    CHECK(near(evaluate(position_state(1), W(2, 0) + W(0, 1)), kExp2I));
    for (const auto& s : {position_state(3), momentum_state(-2), vacuum_state()}) {
      CHECK(s.evaluate(WeylElement{}) == Complex{});
    }
    CHECK(near(vacuum_state().evaluate(scale(2.0, WeylElement::identity())), {2.0, 0.0}));
  }

  TEST_CASE("describe") {
    CHECK(position_state(Rational(3, 2)).describe() == "position:3/2");
    CHECK(momentum_state(-1).describe() == "momentum:-1");
    CHECK(vacuum_state().describe() == "vacuum");
  }

  TEST_CASE("gram matrices") {
    const std::vector<WeylElement> one{WeylElement::identity()};
    const auto g1 = gram_matrix(position_state(4), one);
    REQUIRE(g1.rows() == 1);
    CHECK(g1(0, 0) == Complex(1.0, 0.0));

    const std::vector<WeylElement> pair{W(0, 0), W(0, 1)};
    const auto g2 = gram_matrix(position_state(Rational(1, 3)), pair);
    CHECK(near(g2(0, 0), 1.0));
    CHECK(near(g2(1, 1), 1.0));
    CHECK(g2(0, 1) == Complex{});
    CHECK(g2(1, 0) == Complex{});

    const std::vector<WeylElement> vac{WeylElement::identity(), W(1, 0)};
    const auto g3 = gram_matrix(vacuum_state(), vac);
    CHECK(near(g3(0, 1), kExpMinusQuarter));
    CHECK(near(g3(1, 0), kExpMinusQuarter));
    CHECK(near(g3(1, 1), 1.0));
  }

  TEST_CASE("positivity") {
    const std::vector<WeylElement> one{WeylElement::identity()};
    CHECK(check_positivity(vacuum_state(), one) == doctest::Approx(1.0));
    Sampler sampler(3);
    for (const auto& s : {position_state(Rational(2, 3)), momentum_state(-5), vacuum_state()}) {
      for (int k = 0; k < 20; ++k) {
        std::vector<WeylElement> basis;
        for (int i = 0; i < 8; ++i) basis.push_back(sampler.element(1 + i % 3, 3, 4));
        CHECK(check_positivity(s, basis) >= -1e-10);
      }
    }
  }

  TEST_CASE("positivity argument checks") {
    CHECK_THROWS_AS(check_positivity(vacuum_state(), std::vector<WeylElement>{}), InvalidArgument);
    std::vector<WeylElement> big(kMaxGramBasis + 1, WeylElement::identity());
    CHECK_THROWS_AS(check_positivity(vacuum_state(), big), InvalidArgument);
  }

  TEST_CASE("a non-positive matrix is detected") {
    Eigen::MatrixXcd m(2, 2);
    m << 1.0, 2.0, 2.0, 1.0;
    CHECK(min_hermitian_eigenvalue(m) == doctest::Approx(-1.0));
  }
}
