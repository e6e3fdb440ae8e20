#include "weylreps/almost_periodic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "weylreps/error.hpp"
#include "weylreps/position_rep.hpp"
#include "weylreps/weyl_algebra.hpp"

namespace weylreps {

TrigPolynomial::TrigPolynomial(const Coefficients& coefficients) {
  for (const auto& [a, c] : coefficients) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw InvalidArgument("non-finite coefficient");
    accumulate(a, c);
  }
  prune();
}

TrigPolynomial TrigPolynomial::constant(Complex c) { return TrigPolynomial(Coefficients{{Rational{}, c}}); }

TrigPolynomial TrigPolynomial::character(const Rational& a) {
  return TrigPolynomial(Coefficients{{a, Complex{1.0, 0.0}}});
}

Complex TrigPolynomial::coefficient(const Rational& frequency) const {
  const auto it = coefficients_.find(frequency);
  return it == coefficients_.end() ? Complex{} : it->second;
}

void TrigPolynomial::accumulate(const Rational& frequency, Complex c) {
  auto [it, inserted] = coefficients_.try_emplace(frequency, c);
  if (!inserted) it->second += c;
}

void TrigPolynomial::prune() {
  std::erase_if(coefficients_, [](const auto& kv) { return std::abs(kv.second) <= kPruneThreshold; });
}

TrigPolynomial trig_add(const TrigPolynomial& f, const TrigPolynomial& g) {
  TrigPolynomial r = f;
  for (const auto& [a, c] : g.coefficients_) r.accumulate(a, c);
  r.prune();
  return r;
}

TrigPolynomial trig_scale(Complex c, const TrigPolynomial& f) {
  TrigPolynomial r;
  for (const auto& [a, coeff] : f.coefficients_) r.coefficients_.emplace(a, c * coeff);
  r.prune();
  return r;
}

TrigPolynomial trig_multiply(const TrigPolynomial& f, const TrigPolynomial& g) {
  TrigPolynomial r;
  for (const auto& [a, c] : f.coefficients_) {
    for (const auto& [b, d] : g.coefficients_) r.accumulate(a + b, c * d);
  }
  r.prune();
  return r;
}

TrigPolynomial trig_conjugate(const TrigPolynomial& f) {
  TrigPolynomial::Coefficients out;
  for (const auto& [a, c] : f.coefficients()) out.emplace(-a, std::conj(c));
  return TrigPolynomial(out);
}

TrigPolynomial translate(const TrigPolynomial& f, const Rational& t) {
  TrigPolynomial::Coefficients out;
  for (const auto& [a, c] : f.coefficients()) out.emplace(a, c * phase(a * t));
  return TrigPolynomial(out);
}

Complex invariant_mean(const TrigPolynomial& f) { return f.coefficient(Rational{}); }

Complex evaluate_at(const TrigPolynomial& f, const Rational& x) {
  Complex total{};
  for (const auto& [a, c] : f.coefficients()) total += c * phase(a * x);
  return total;
}

SupNormBounds sup_norm_bounds(const TrigPolynomial& f) {
  SupNormBounds bounds{0.0, 0.0};
  double max_freq = 0.0;
  for (const auto& [a, c] : f.coefficients()) {
    bounds.upper += std::abs(c);
    max_freq = std::max(max_freq, std::abs(a.to_double()));
  }
  if (f.is_zero()) return bounds;

  // Quarter-period spacing of the fastest character; covers 128 of its periods.
  const double step = max_freq > 0.0 ? std::numbers::pi / (4.0 * max_freq) : 1.0;
  for (int k = -kSupNormSamples / 2; k < kSupNormSamples / 2; ++k) {
    const double x = k * step;
    Complex value{};
    for (const auto& [a, c] : f.coefficients()) {
      const double t = a.to_double() * x;
      value += c * Complex{std::cos(t), std::sin(t)};
    }
    bounds.lower = std::max(bounds.lower, std::abs(value));
  }
  bounds.lower = std::min(bounds.lower, bounds.upper);
  return bounds;
}

Complex haar_fourier(const Rational& a) { return a.is_zero() ? Complex{1.0, 0.0} : Complex{}; }

HaarWitness haar_fourier_witness(const Rational& lambda, std::span<const Rational> probes) {
  if (probes.empty()) throw InvalidArgument("haar_fourier_witness: empty probe list");
  HaarWitness w{lambda, {}, true};
  w.probes.reserve(probes.size());
  for (const auto& a : probes) {
    FourierProbe p{a, v_direction_matrix_element(a, lambda), haar_fourier(a)};
    if (p.momentum_transform != p.haar) w.exact_match = false;
    w.probes.push_back(std::move(p));
  }
  return w;
}

}  // namespace weylreps
