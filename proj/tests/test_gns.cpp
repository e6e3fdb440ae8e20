#include <doctest.h>

#include <vector>

#include "testing.hpp"
#include "weylreps/error.hpp"
#include "weylreps/gns.hpp"
#include "weylreps/sampling.hpp"

using namespace weylreps;
using namespace weylreps::testing;

namespace {

WeylElement W(const Rational& a, const Rational& b) { return WeylElement::generator(a, b); }

GnsVector vec(const WeylElement& x, const StateFunctional& s) { return {x, s}; }

}  // namespace

TEST_SUITE("gns") {
  TEST_CASE("cyclic vector is normalized") {
    for (const auto& s : {position_state(2), momentum_state(Rational(-1, 3)), vacuum_state()}) {
      const auto omega = cyclic_vector(s);
      CHECK(near(gns_inner(omega, omega), 1.0));
      CHECK(gns_norm(omega) == doctest::Approx(1.0));
    }
  }

  TEST_CASE("inner products under a position state") {
    const auto s = position_state(0);
    CHECK(gns_inner(vec(W(1, 2), s), vec(W(3, 5), s)) == Complex{});
    CHECK(near(gns_inner(vec(W(1, 2), s), vec(W(3, 2), s)), kExpMinus4I));
  }

  TEST_CASE("owners must agree") {
    CHECK_THROWS_AS(gns_inner(cyclic_vector(position_state(0)), cyclic_vector(position_state(1))), OwnerMismatch);
    CHECK_THROWS_AS(gns_inner(cyclic_vector(vacuum_state()), cyclic_vector(momentum_state(0))), OwnerMismatch);
  }

  TEST_CASE("gns_apply") {
    const auto s = position_state(Rational(3, 2));
    const auto omega = cyclic_vector(s);
    CHECK(gns_distance(gns_apply(WeylElement::identity(), omega), omega) == 0.0);

    const auto moved = gns_apply(W(0, Rational(1, 7)), omega);
    CHECK(gns_norm(moved) == doctest::Approx(1.0));
    CHECK(gns_inner(omega, moved) == Complex{});

    // U_a Omega = e^{ia lambda} Omega up to a null vector.
    const Rational a(2);
    const auto rotated = gns_apply(W(a, 0), omega);
    const auto expected = vec(scale(phase(a * Rational(3, 2)), WeylElement::identity()), s);
    CHECK(gns_distance(rotated, expected) < 1e-12);
    CHECK(is_null(vec(W(a, 0) - scale(phase(a * Rational(3, 2)), WeylElement::identity()), s)));
  }

  TEST_CASE("reduction") {
    const auto r0 = reduce(cyclic_vector(position_state(1)));
    REQUIRE(r0.amplitudes.size() == 1);
    CHECK(r0.amplitudes.at(0) == Complex(1.0, 0.0));

    const auto r = reduce(vec(W(2, 3), position_state(1)));
    REQUIRE(r.amplitudes.size() == 1);
    CHECK(near(r.amplitudes.at(3), kExpMinus4I));

    const auto twice = reduce(vec(W(0, 1) + W(0, 1), position_state(1)));
    REQUIRE(twice.amplitudes.size() == 1);
    CHECK(twice.amplitudes.at(1) == Complex(2.0, 0.0));

    const auto m = reduce(vec(W(5, 1), momentum_state(0)));
    REQUIRE(m.amplitudes.size() == 1);
    CHECK(near(m.amplitudes.at(5), 1.0));

    CHECK_THROWS_AS(reduce(cyclic_vector(vacuum_state())), InvalidArgument);
    CHECK_THROWS_AS(reduce_position(cyclic_vector(momentum_state(0))), InvalidArgument);
    CHECK_THROWS_AS(reduce_momentum(cyclic_vector(position_state(0))), InvalidArgument);
  }

  TEST_CASE("continuity scans") {
    const std::vector<Rational> grid{Rational(1, 8), Rational(1, 64)};
    const auto lambda = Rational(5, 3);
    const auto u = continuity_scan(position_state(lambda), Direction::U, grid);
    REQUIRE(u.size() == 2);
    CHECK(near(u[0].value, phase(lambda / 8)));
    CHECK(near(u[1].value, phase(lambda / 64)));

    const std::vector<Rational> eighth{Rational(1, 8)};
    CHECK(continuity_scan(position_state(lambda), Direction::V, eighth)[0].value == Complex{});

    const std::vector<Rational> half{Rational(1, 2)};
    CHECK(near(continuity_scan(vacuum_state(), Direction::V, half)[0].value, kExpMinusSixteenth));

    CHECK_THROWS_AS(continuity_scan(vacuum_state(), Direction::U, std::vector<Rational>{}), InvalidArgument);
  }

  TEST_CASE("scan CSV") {
    const std::vector<Rational> grid{0, Rational(1, 8), Rational(1, 64)};
    const auto csv = scan_to_csv(continuity_scan(position_state(0), Direction::V, grid));
    CHECK(csv == "parameter,re,im\n0,1,0\n1/8,0,0\n1/64,0,0\n");
  }

  TEST_CASE("regularity fingerprints") {
    CHECK(is_regular_direction(position_state(1), Direction::U));
    CHECK_FALSE(is_regular_direction(position_state(1), Direction::V));
    CHECK_FALSE(is_regular_direction(momentum_state(1), Direction::U));
    CHECK(is_regular_direction(momentum_state(1), Direction::V));
    CHECK(is_regular_direction(vacuum_state(), Direction::U));
    CHECK(is_regular_direction(vacuum_state(), Direction::V));
  }

  TEST_CASE("eigenvector witness") {
    const std::vector<Rational> eigen{3};
    const std::vector<Rational> off{1};
    const auto w = eigenvector_witness(position_state(2), eigen, off);
    CHECK(w.passed);
    CHECK(w.max_eigen_distance < 1e-12);
    CHECK(w.off_direction_vanishes);
    CHECK(w.proof_chain_deviation < 1e-12);

    const auto m = eigenvector_witness(momentum_state(0), eigen, off);
    CHECK(m.passed);
    CHECK(m.eigen_direction == Direction::V);

    CHECK_THROWS_AS(eigenvector_witness(vacuum_state(), eigen, off), InvalidArgument);
  }

  TEST_CASE("equivalence with the explicit models") {
    const std::vector<WeylElement> id{WeylElement::identity()};
    CHECK(equivalence_check(Rational(0), id) == 0.0);
    const std::vector<WeylElement> pair{W(1, 2), W(3, 2)};
    CHECK(equivalence_check(Rational(0), pair) < 1e-12);

    Sampler sampler(13);
    std::vector<WeylElement> words;
    for (int k = 0; k < 50; ++k) words.push_back(sampler.element(1 + k % 3, 5));
    CHECK(equivalence_check(sampler.rational(5), words) < 1e-12);
    CHECK(equivalence_check(momentum_state(sampler.rational(5)), words) < 1e-12);
    CHECK_THROWS_AS(equivalence_check(Rational(0), std::vector<WeylElement>{}), InvalidArgument);
  }

  TEST_CASE("representation is multiplicative and unitary") {
    Sampler sampler(17);
    for (const auto& s : {position_state(Rational(1, 2)), momentum_state(2), vacuum_state()}) {
      for (int k = 0; k < 20; ++k) {
        const auto x = sampler.element(2, 3);
        const auto y = sampler.element(2, 3);
        const auto lhs = vec(x * y, s);
        const auto rhs = gns_apply(x, vec(y, s));
        CHECK(gns_distance(lhs, rhs) < 1e-12);
        const auto g = W(sampler.rational(3), sampler.rational(3));
        CHECK(gns_norm(gns_apply(g, vec(y, s))) == doctest::Approx(gns_norm(vec(y, s))).epsilon(1e-12));
      }
    }
  }
}
