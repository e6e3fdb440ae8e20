#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "weylreps/rational.hpp"
#include "weylreps/weyl_algebra.hpp"

namespace weylreps {

enum class StateKind { Position, Momentum, Vacuum };

/// One of the built-in states of the Weyl algebra.
///
///   Position(l):  W(a, b) -> e^{ial} if b == 0, else 0
///   Momentum(m):  W(a, b) -> e^{ibm} if a == 0, else 0
///   Vacuum:       W(a, b) -> e^{-iab/2} e^{-(a^2 + b^2)/4}
///
/// The vacuum is the Gaussian ground-state expectation of e^{iaQ} e^{ibP}
/// in the Schrodinger representation; the zero tests in the other two are
/// exact comparisons on rationals.
class StateFunctional {
 public:
  static StateFunctional position(const Rational& lambda) { return {StateKind::Position, lambda}; }
  static StateFunctional momentum(const Rational& mu) { return {StateKind::Momentum, mu}; }
  static StateFunctional vacuum() { return {StateKind::Vacuum, Rational{}}; }

  StateKind kind() const { return kind_; }
  /// lambda for Position, mu for Momentum, 0 for Vacuum.
  const Rational& parameter() const { return parameter_; }

  Complex on_generator(const WeylIndex& index) const;
  Complex evaluate(const WeylElement& x) const;

  std::string describe() const;

  friend bool operator==(const StateFunctional&, const StateFunctional&) = default;

 private:
  StateFunctional(StateKind kind, Rational parameter) : kind_(kind), parameter_(std::move(parameter)) {}

  StateKind kind_;
  Rational parameter_;
};

inline StateFunctional position_state(const Rational& lambda) { return StateFunctional::position(lambda); }
inline StateFunctional momentum_state(const Rational& mu) { return StateFunctional::momentum(mu); }
inline StateFunctional vacuum_state() { return StateFunctional::vacuum(); }
inline Complex evaluate(const StateFunctional& state, const WeylElement& x) { return state.evaluate(x); }

inline constexpr std::size_t kMaxGramBasis = 64;

/// G(i, j) = state(basis_i* basis_j).
Eigen::MatrixXcd gram_matrix(const StateFunctional& state, std::span<const WeylElement> basis);

/// Smallest eigenvalue of the Gram matrix. A state yields >= -1e-10.
/// Throws InvalidArgument for an empty or oversized basis and EigenFailure
/// if the eigensolver does not converge.
double check_positivity(const StateFunctional& state, std::span<const WeylElement> basis);

/// Smallest eigenvalue of a Hermitian matrix.
double min_hermitian_eigenvalue(const Eigen::MatrixXcd& m);

}  // namespace weylreps
