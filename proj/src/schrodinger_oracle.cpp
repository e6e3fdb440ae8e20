#include "weylreps/schrodinger_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "weylreps/error.hpp"

namespace weylreps {

namespace {

double trapezoid_weight(std::size_t i, std::size_t n) { return i == 0 || i + 1 == n ? 0.5 : 1.0; }

}  // namespace

GridWavefunction::GridWavefunction(double x_min, double x_max, std::vector<Complex> samples)
    : x_min_(x_min), x_max_(x_max), samples_(std::move(samples)) {
  if (samples_.size() < 2 || !(x_max > x_min)) throw InvalidArgument("GridWavefunction: degenerate grid");
  step_ = (x_max_ - x_min_) / static_cast<double>(samples_.size() - 1);
}

GridWavefunction GridWavefunction::sample(const std::function<Complex(double)>& f, double x_min, double x_max,
                                          std::size_t count) {
  if (count < 2) throw InvalidArgument("GridWavefunction: need at least two samples");
  std::vector<Complex> values(count);
  const double step = (x_max - x_min) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) values[i] = f(x_min + static_cast<double>(i) * step);
  return GridWavefunction(x_min, x_max, std::move(values)).normalized();
}

Complex GridWavefunction::value_at(double x) const {
  const double t = (x - x_min_) / step_;
  if (t < 0.0 || t > static_cast<double>(samples_.size() - 1)) return {};
  const double cell = std::floor(t);
  const auto i = static_cast<std::size_t>(cell);
  const double frac = t - cell;
  if (i + 1 >= samples_.size() || frac < 1e-9) return samples_[std::min(i, samples_.size() - 1)];
  if (frac > 1.0 - 1e-9) return samples_[i + 1];
  return samples_[i] * (1.0 - frac) + samples_[i + 1] * frac;
}

double GridWavefunction::norm() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < samples_.size(); ++i) sum += trapezoid_weight(i, samples_.size()) * std::norm(samples_[i]);
  return std::sqrt(sum * step_);
}

GridWavefunction GridWavefunction::normalized() const {
  const double n = norm();
  if (n == 0.0) throw InvalidArgument("GridWavefunction: cannot normalize the zero function");
  std::vector<Complex> out = samples_;
  for (auto& c : out) c /= n;
  return GridWavefunction(x_min_, x_max_, std::move(out));
}

GridWavefunction gaussian_ground_state(double x_min, double x_max, std::size_t count) {
  if (count < 1024) throw InvalidArgument("gaussian_ground_state: need at least 1024 grid points");
  if (x_min > -8.0 || x_max < 8.0) throw InvalidArgument("gaussian_ground_state: window must contain [-8, 8]");
  const double amplitude = std::pow(std::numbers::pi, -0.25);
  return GridWavefunction::sample([&](double x) { return Complex{amplitude * std::exp(-x * x / 2.0), 0.0}; },
                                  x_min, x_max, count);
}

GridWavefunction gaussian_packet(double center, double width, double kick, double x_min, double x_max,
                                 std::size_t count) {
  if (!(width > 0.0)) throw InvalidArgument("gaussian_packet: width must be positive");
  return GridWavefunction::sample(
      [&](double x) {
        const double d = (x - center) / width;
        return std::exp(-d * d / 2.0) * Complex{std::cos(kick * x), std::sin(kick * x)};
      },
      x_min, x_max, count);
}

std::vector<FamilyMember> uncertainty_test_family() {
  const auto bumps = [](double separation, Complex relative) {
    return GridWavefunction::sample(
        [=](double x) {
          const double l = x + separation / 2.0;
          const double r = x - separation / 2.0;
          return Complex{std::exp(-l * l / 2.0), 0.0} + relative * std::exp(-r * r / 2.0);
        },
        -kOracleHalfWidth, kOracleHalfWidth, kOracleCount);
  };
  std::vector<FamilyMember> family;
  family.push_back({"ground state", gaussian_ground_state(), true});
  family.push_back({"shifted gaussian", gaussian_packet(1.0, 1.0), true});
  family.push_back({"squeezed gaussian", gaussian_packet(0.0, 0.5), true});
  family.push_back({"stretched gaussian", gaussian_packet(-0.5, 2.0), true});
  family.push_back({"boosted gaussian", gaussian_packet(0.0, 1.0, 1.5), true});
  family.push_back({"two bumps, separation 2", bumps(2.0, 1.0), false});
  family.push_back({"two bumps, separation 4", bumps(4.0, 1.0), false});
  family.push_back({"two bumps, antisymmetric", bumps(3.0, -1.0), false});
  family.push_back({"two bumps, relative phase i", bumps(3.0, Complex{0.0, 1.0}), false});
  family.push_back({"first excited state",
                    GridWavefunction::sample([](double x) { return Complex{x * std::exp(-x * x / 2.0), 0.0}; },
                                             -kOracleHalfWidth, kOracleHalfWidth, kOracleCount),
                    false});
  return family;
}

Complex characteristic_function(const GridWavefunction& psi, const Rational& a, const Rational& b) {
  const double shift = b.to_double();
  if (std::abs(shift) > (psi.x_max() - psi.x_min()) / 4.0) {
    throw InvalidArgument("characteristic_function: shift " + b.str() + " exceeds a quarter of the window");
  }
  const double freq = a.to_double();
  const auto& s = psi.samples();
  Complex total{};
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double x = psi.x(i);
    const Complex shifted = psi.value_at(x + shift);
    total += trapezoid_weight(i, s.size()) * std::conj(s[i]) * Complex{std::cos(freq * x), std::sin(freq * x)} * shifted;
  }
  return total * psi.step();
}

Dispersions dispersions(const GridWavefunction& psi) {
  const auto& s = psi.samples();
  const std::size_t n = s.size();
  const double h = psi.step();

  double mass = 0.0;
  double first = 0.0;
  double second = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = trapezoid_weight(i, n) * std::norm(s[i]);
    const double x = psi.x(i);
    mass += w;
    first += w * x;
    second += w * x * x;
  }
  first /= mass;
  second /= mass;

  // P = -i d/dx: <P> = int conj(psi) (-i psi'), <P^2> = int |psi'|^2.
  double p_first = 0.0;
  double p_second = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const Complex derivative = (s[i + 1] - s[i - 1]) / (2.0 * h);
    p_first += (std::conj(s[i]) * Complex{0.0, -1.0} * derivative).real();
    p_second += std::norm(derivative);
  }
  p_first /= mass;
  p_second /= mass;

  return {std::sqrt(std::max(0.0, second - first * first)), std::sqrt(std::max(0.0, p_second - p_first * p_first))};
}

double point_mass_probe(const GridWavefunction& psi, double lambda, double epsilon) {
  if (!(epsilon > psi.step())) throw InvalidArgument("point_mass_probe: epsilon must exceed the grid step");
  const double lo = std::max(lambda - epsilon, psi.x_min());
  const double hi = std::min(lambda + epsilon, psi.x_max());
  if (!(hi > lo)) return 0.0;

  // Exact integral of the piecewise-linear interpolant of |psi|^2.
  const auto& s = psi.samples();
  const double h = psi.step();
  const auto density = [&](std::size_t i) { return std::norm(s[i]); };
  const auto first_cell = static_cast<std::size_t>(std::floor((lo - psi.x_min()) / h));
  double total = 0.0;
  for (std::size_t i = first_cell; i + 1 < s.size(); ++i) {
    const double left = psi.x(i);
    const double right = left + h;
    if (left >= hi) break;
    const double from = std::max(left, lo);
    const double to = std::min(right, hi);
    if (to <= from) continue;
    const auto at = [&](double x) { return density(i) + (density(i + 1) - density(i)) * (x - left) / h; };
    total += (to - from) * (at(from) + at(to)) / 2.0;
  }
  return std::clamp(total / (psi.norm() * psi.norm()), 0.0, 1.0);
}

Complex mean_quadrature(const TrigPolynomial& f, double half_width) {
  if (!(half_width >= 1.0)) throw InvalidArgument("mean_quadrature: N must be at least 1");
  double max_freq = 0.0;
  for (const auto& [a, c] : f.coefficients()) max_freq = std::max(max_freq, std::abs(a.to_double()));

  // At least 64 points per period of the fastest character.
  const double span = 2.0 * half_width;
  const double periods = span * max_freq / (2.0 * std::numbers::pi);
  const auto intervals = static_cast<std::size_t>(std::max(4096.0, std::ceil(64.0 * periods)));
  const double h = span / static_cast<double>(intervals);

  Complex total{};
  for (std::size_t k = 0; k <= intervals; ++k) {
    const double x = -half_width + static_cast<double>(k) * h;
    Complex value{};
    for (const auto& [a, c] : f.coefficients()) {
      const double t = a.to_double() * x;
      value += c * Complex{std::cos(t), std::sin(t)};
    }
    total += trapezoid_weight(k, intervals + 1) * value;
  }
  return total * h / span;
}

double mean_truncation_bound(const TrigPolynomial& f, double half_width) {
  double bound = 0.0;
  for (const auto& [a, c] : f.coefficients()) {
    if (!a.is_zero()) bound += 2.0 * std::abs(c) / std::abs(a.to_double());
  }
  return bound / half_width;
}

}  // namespace weylreps
