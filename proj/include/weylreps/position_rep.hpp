#pragma once

#include <map>

#include "weylreps/rational.hpp"
#include "weylreps/weyl_algebra.hpp"

namespace weylreps {

/// Which nonregular model a vector lives in.
///
/// Position: U_a phi_l = e^{ial} phi_l,  V_b phi_l = phi_{l-b}
/// Momentum: U_a phi_m = phi_{m+a},      V_b phi_m = e^{ibm} phi_m
///
/// Both satisfy U_a V_b = e^{-iab} V_b U_a. In the position model only
/// a -> U_a is continuous; in the momentum model only b -> V_b is.
enum class Flavor { Position, Momentum };

/// Finitely supported vector of l2(R): exact rational points mapped to
/// amplitudes. Basis vectors phi_x are indicator functions of {x}.
class FiniteSupportVector {
 public:
  using Amplitudes = std::map<Rational, Complex>;

  explicit FiniteSupportVector(Flavor flavor = Flavor::Position) : flavor_(flavor) {}
  FiniteSupportVector(Flavor flavor, Amplitudes amplitudes);

  static FiniteSupportVector basis(const Rational& point, Flavor flavor = Flavor::Position);

  Flavor flavor() const { return flavor_; }
  const Amplitudes& amplitudes() const { return amplitudes_; }
  Complex amplitude(const Rational& point) const;
  bool is_zero() const { return amplitudes_.empty(); }

  double norm() const;

 private:
  Flavor flavor_;
  Amplitudes amplitudes_;
};

/// Sum over the exact intersection of supports, conjugate-linear in u.
/// Throws FlavorMismatch.
Complex inner(const FiniteSupportVector& u, const FiniteSupportVector& v);

FiniteSupportVector add(const FiniteSupportVector& u, const FiniteSupportVector& v);
FiniteSupportVector scale(Complex c, const FiniteSupportVector& v);
FiniteSupportVector subtract(const FiniteSupportVector& u, const FiniteSupportVector& v);
double max_amplitude_deviation(const FiniteSupportVector& u, const FiniteSupportVector& v);

FiniteSupportVector apply_U(const Rational& a, const FiniteSupportVector& v);
FiniteSupportVector apply_V(const Rational& b, const FiniteSupportVector& v);
/// Action of an algebra element: sum of c U_a V_b v over its terms.
FiniteSupportVector apply(const WeylElement& x, const FiniteSupportVector& v);

/// Position operator Q phi_l = l phi_l. Throws NonexistentObservable on
/// momentum-flavor vectors, where a -> U_a is not continuous.
FiniteSupportVector apply_Q(const FiniteSupportVector& v);
/// Momentum operator P phi_m = m phi_m. Throws NonexistentObservable on
/// position-flavor vectors.
FiniteSupportVector apply_P(const FiniteSupportVector& v);

/// -i t^{-1} (G_t - I) v, where G is the continuous group of the flavor
/// (U for position, V for momentum). Converges to Q v (resp. P v) as t -> 0
/// with error at most t * max|x|^2 per basis vector. Throws on t == 0.
FiniteSupportVector finite_difference_generator(const Rational& t, const FiniteSupportVector& v);

/// Max amplitude deviation between U_a V_b phi_x and e^{-iab} V_b U_a phi_x.
double weyl_relation_check(const Rational& a, const Rational& b, const Rational& point,
                           Flavor flavor = Flavor::Position);

/// <phi_l, V_b phi_l> in the position model: exactly 1 at b == 0 and
/// exactly 0 everywhere else.
Complex v_direction_matrix_element(const Rational& b, const Rational& lambda);

/// Mirror: <phi_m, U_a phi_m> in the momentum model.
Complex u_direction_matrix_element(const Rational& a, const Rational& mu);

}  // namespace weylreps
