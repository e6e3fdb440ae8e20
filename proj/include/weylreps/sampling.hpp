#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "weylreps/almost_periodic.hpp"
#include "weylreps/rational.hpp"
#include "weylreps/weyl_algebra.hpp"

namespace weylreps {

/// Seeded generators for property sweeps. std::mt19937_64 output is fixed
/// by the standard; the distributions below only use integer arithmetic on
/// its output, so sweeps are reproducible across platforms.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  /// Uniform in [0, 1) from 53 bits.
  double unit();

  /// p/q with 1 <= q <= max_denominator and |p/q| <= bound.
  Rational rational(std::int64_t bound, std::int64_t max_denominator = 16);
  Rational nonzero_rational(std::int64_t bound, std::int64_t max_denominator = 16);

  /// Coefficient with modulus in [0.25, 1] and uniform argument.
  Complex coefficient();

  WeylElement element(int terms, std::int64_t bound, std::int64_t max_denominator = 8);
  TrigPolynomial polynomial(int terms, std::int64_t bound, std::int64_t max_denominator = 8);

 private:
  std::mt19937_64 rng_;
};

}  // namespace weylreps
