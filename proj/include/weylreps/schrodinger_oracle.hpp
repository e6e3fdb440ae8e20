#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "weylreps/almost_periodic.hpp"
#include "weylreps/rational.hpp"

namespace weylreps {

/// Uniform-grid samples of a wavefunction on [x_min, x_max]; zero outside.
/// This is the quadrature model of L2(R) used to check the regular
/// (Schrodinger) side of the library independently of the algebra.
class GridWavefunction {
 public:
  GridWavefunction(double x_min, double x_max, std::vector<Complex> samples);

  /// Samples `f` on `count` equally spaced points, then normalizes.
  static GridWavefunction sample(const std::function<Complex(double)>& f, double x_min, double x_max,
                                 std::size_t count);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  double step() const { return step_; }
  std::size_t size() const { return samples_.size(); }
  const std::vector<Complex>& samples() const { return samples_; }
  double x(std::size_t i) const { return x_min_ + static_cast<double>(i) * step_; }

  /// Linear interpolation between grid points, zero outside the window.
  Complex value_at(double x) const;

  /// Trapezoidal L2 norm.
  double norm() const;
  GridWavefunction normalized() const;

 private:
  double x_min_;
  double x_max_;
  double step_;
  std::vector<Complex> samples_;
};

inline constexpr double kOracleHalfWidth = 12.0;
/// Grid step 1/2048 on [-12, 12]: integer and dyadic shifts land on grid
/// points, and probe windows down to 1/1024 still span whole cells.
inline constexpr std::size_t kOracleCount = 24 * 2048 + 1;

/// pi^{-1/4} e^{-x^2/2}. Requires count >= 1024 and a window containing
/// [-8, 8]; throws InvalidArgument otherwise.
GridWavefunction gaussian_ground_state(double x_min = -kOracleHalfWidth, double x_max = kOracleHalfWidth,
                                       std::size_t count = kOracleCount);

/// Normalized e^{-(x - center)^2 / (2 width^2)} e^{i kick x}.
GridWavefunction gaussian_packet(double center, double width, double kick = 0.0, double x_min = -kOracleHalfWidth,
                                 double x_max = kOracleHalfWidth, std::size_t count = kOracleCount);

struct FamilyMember {
  std::string name;
  GridWavefunction psi;
  bool gaussian;  // minimum-uncertainty states: product should be exactly 1/2
};

/// Ten wavefunctions for uncertainty checks: five Gaussian packets (unit,
/// shifted, squeezed, stretched, boosted) and five non-Gaussian states
/// (two-bump superpositions and the first oscillator excitation).
std::vector<FamilyMember> uncertainty_test_family();

/// <psi, e^{iaQ} e^{ibP} psi> = int conj(psi(x)) e^{iax} psi(x + b) dx.
/// Throws InvalidArgument when |b| exceeds a quarter of the window.
Complex characteristic_function(const GridWavefunction& psi, const Rational& a, const Rational& b);

struct Dispersions {
  double delta_q;
  double delta_p;
  double product() const { return delta_q * delta_p; }
};

/// Position spread from moments, momentum spread from centered differences.
Dispersions dispersions(const GridWavefunction& psi);
inline double dispersion_product(const GridWavefunction& psi) { return dispersions(psi).product(); }

/// int_{lambda - eps}^{lambda + eps} |psi|^2, i.e. <psi, E^Q([lambda - eps, lambda + eps]) psi>.
/// Requires eps > step; throws InvalidArgument otherwise.
double point_mass_probe(const GridWavefunction& psi, double lambda, double epsilon);

/// Trapezoidal (1/2N) int_{-N}^{N} f(x) dx. Requires N >= 1.
Complex mean_quadrature(const TrigPolynomial& f, double half_width);

/// sum_{a_j != 0} 2 |c_j| / (|a_j| N): how far the truncated mean may sit
/// from the invariant mean.
double mean_truncation_bound(const TrigPolynomial& f, double half_width);

}  // namespace weylreps
