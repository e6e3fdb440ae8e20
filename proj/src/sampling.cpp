#include "weylreps/sampling.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace weylreps {

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling keeps the draw unbiased and platform independent.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw = rng_();
  while (draw >= limit) draw = rng_();
  return lo + static_cast<std::int64_t>(draw % span);
}

double Sampler::unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

Rational Sampler::rational(std::int64_t bound, std::int64_t max_denominator) {
  const std::int64_t q = integer(1, max_denominator);
  const std::int64_t p = integer(-bound * q, bound * q);
  return {static_cast<long>(p), static_cast<long>(q)};
}

Rational Sampler::nonzero_rational(std::int64_t bound, std::int64_t max_denominator) {
  Rational r = rational(bound, max_denominator);
  while (r.is_zero()) r = rational(bound, max_denominator);
  return r;
}

Complex Sampler::coefficient() {
  const double modulus = 0.25 + 0.75 * unit();
  return std::polar(modulus, 2.0 * std::numbers::pi * unit());
}

WeylElement Sampler::element(int terms, std::int64_t bound, std::int64_t max_denominator) {
  WeylElement::Terms t;
  for (int k = 0; k < terms; ++k) {
    t[WeylIndex{rational(bound, max_denominator), rational(bound, max_denominator)}] += coefficient();
  }
  return WeylElement::from_terms(t);
}

TrigPolynomial Sampler::polynomial(int terms, std::int64_t bound, std::int64_t max_denominator) {
  TrigPolynomial::Coefficients c;
  for (int k = 0; k < terms; ++k) c[rational(bound, max_denominator)] += coefficient();
  return TrigPolynomial(c);
}

}  // namespace weylreps
