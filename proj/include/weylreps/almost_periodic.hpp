#pragma once

#include <map>
#include <span>
#include <vector>

#include "weylreps/rational.hpp"

namespace weylreps {

/// f(x) = sum_j c_j e^{i a_j x} with exact rational frequencies a_j.
///
/// Trigonometric polynomials are dense in the almost periodic functions,
/// i.e. in C(bR). The Bohr compactification bR itself is never built; all
/// work happens on character (frequency) data.
class TrigPolynomial {
 public:
  using Coefficients = std::map<Rational, Complex>;

  TrigPolynomial() = default;
  explicit TrigPolynomial(const Coefficients& coefficients);

  static TrigPolynomial constant(Complex c);
  /// u_a(x) = e^{iax}.
  static TrigPolynomial character(const Rational& a);

  const Coefficients& coefficients() const { return coefficients_; }
  Complex coefficient(const Rational& frequency) const;
  bool is_zero() const { return coefficients_.empty(); }

 private:
  friend TrigPolynomial trig_add(const TrigPolynomial&, const TrigPolynomial&);
  friend TrigPolynomial trig_scale(Complex, const TrigPolynomial&);
  friend TrigPolynomial trig_multiply(const TrigPolynomial&, const TrigPolynomial&);

  void accumulate(const Rational& frequency, Complex c);
  void prune();

  Coefficients coefficients_;
};

inline TrigPolynomial trig_generator(const Rational& a) { return TrigPolynomial::character(a); }
TrigPolynomial trig_add(const TrigPolynomial& f, const TrigPolynomial& g);
TrigPolynomial trig_scale(Complex c, const TrigPolynomial& f);
/// Convolves frequency supports: u_a u_b = u_{a+b}.
TrigPolynomial trig_multiply(const TrigPolynomial& f, const TrigPolynomial& g);
/// Pointwise complex conjugate: negated frequencies, conjugated coefficients.
TrigPolynomial trig_conjugate(const TrigPolynomial& f);
/// x -> f(x + t): multiplies c_j by e^{i a_j t}.
TrigPolynomial translate(const TrigPolynomial& f, const Rational& t);

/// Coefficient at frequency 0: the exact value of lim (1/2N) int_{-N}^{N} f.
Complex invariant_mean(const TrigPolynomial& f);

/// Point evaluation. Each real x gives a multiplicative state of AP(R).
Complex evaluate_at(const TrigPolynomial& f, const Rational& x);

struct SupNormBounds {
  double lower;  // largest |f| over the sample points
  double upper;  // sum of |c_j|
};

inline constexpr int kSupNormSamples = 1024;

/// Certified bracket for sup_x |f(x)|. Samples include x = 0.
SupNormBounds sup_norm_bounds(const TrigPolynomial& f);

/// Fourier coefficients of Haar measure on bR: 1 at a == 0, else 0.
Complex haar_fourier(const Rational& a);

struct FourierProbe {
  Rational frequency;
  Complex momentum_transform;  // <phi_l, V_a phi_l>
  Complex haar;
};

/// Fourier data of the momentum spectral measure nu in the position
/// eigenstate phi_l, compared against Haar measure. Exact agreement at
/// every probe means nu has the characteristic function of Haar measure,
/// which assigns R measure zero; that last step needs countable additivity
/// on bR and is not computed.
struct HaarWitness {
  Rational lambda;
  std::vector<FourierProbe> probes;
  bool exact_match = false;
};

/// Throws InvalidArgument on an empty probe list.
HaarWitness haar_fourier_witness(const Rational& lambda, std::span<const Rational> probes);

}  // namespace weylreps
