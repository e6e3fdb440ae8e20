#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "weylreps/position_rep.hpp"
#include "weylreps/states.hpp"
#include "weylreps/weyl_algebra.hpp"

namespace weylreps {

/// A vector x Omega of the GNS space of `owner`, kept as the formal word x.
/// Geometry comes from <x Omega, y Omega> = owner(x* y).
struct GnsVector {
  WeylElement word;
  StateFunctional owner;
};

/// The cyclic vector Omega (word = identity).
GnsVector cyclic_vector(const StateFunctional& state);

/// owner(u.word* v.word). Throws OwnerMismatch when owners differ.
Complex gns_inner(const GnsVector& u, const GnsVector& v);

/// pi(x) v: the word becomes x * v.word.
GnsVector gns_apply(const WeylElement& x, const GnsVector& v);

/// GNS norm. For position and momentum owners this is the l2 norm of the
/// canonical reduction, so null vectors come out as exactly 0. For the
/// vacuum it is sqrt(max(0, Re owner(x* x))).
double gns_norm(const GnsVector& v);
double gns_distance(const GnsVector& u, const GnsVector& v);

/// Exact zero for position/momentum owners, norm^2 < 1e-12 for the vacuum.
bool is_null(const GnsVector& v);

/// Canonical form of a GNS vector of a position (momentum) state, keyed by
/// the translation applied to the cyclic vector.
///
/// Position(l): c W(a, b) Omega contributes c e^{ia(l - b)} at key b,
///              i.e. to phi_{l-b} of the position model.
/// Momentum(m): c W(a, b) Omega contributes c e^{ibm} at key a,
///              i.e. to phi_{m+a} of the momentum model.
struct ReducedVector {
  Flavor flavor = Flavor::Position;
  std::map<Rational, Complex> amplitudes;
};

/// Throws InvalidArgument unless the owner is a position state.
ReducedVector reduce_position(const GnsVector& v);
/// Throws InvalidArgument unless the owner is a momentum state.
ReducedVector reduce_momentum(const GnsVector& v);
/// Dispatches on the owner; throws InvalidArgument for the vacuum.
ReducedVector reduce(const GnsVector& v);
Complex reduced_inner(const ReducedVector& u, const ReducedVector& v);

/// Maps a reduction onto the explicit model vector it stands for.
FiniteSupportVector to_model_vector(const ReducedVector& r, const Rational& parameter);

enum class Direction { U, V };

struct ScanPoint {
  Rational parameter;
  Complex value;
};

/// t -> <Omega, pi(G_t) Omega> = state(W(t, 0)) or state(W(0, t)).
std::vector<ScanPoint> continuity_scan(const StateFunctional& state, Direction direction,
                                       std::span<const Rational> grid);

/// `parameter,re,im` with a header row; parameters as exact rationals.
std::string scan_to_csv(std::span<const ScanPoint> points);

/// Decided from the generator rules, never by sampling.
bool is_regular_direction(const StateFunctional& state, Direction direction);

/// Evidence that an eigenvector of one Weyl group forces the other group to
/// be discontinuous at the cyclic vector.
struct EigenvectorWitness {
  StateFunctional state;
  Direction eigen_direction;
  /// max over sampled t of ||pi(G_t) Omega - e^{itx} Omega||.
  double max_eigen_distance = 0.0;
  /// <Omega, pi(H_s) Omega> == 0 exactly for every sampled s != 0.
  bool off_direction_vanishes = true;
  /// Max deviation along <O, G_{-t} H_s G_t O> = k <O, H_s O> = <O, H_s O>,
  /// with k = e^{its} (position) or e^{-its} (momentum).
  double proof_chain_deviation = 0.0;
  /// Each sampled s != 0 had some sampled t with k != 1, so the chain
  /// forces <Omega, H_s Omega> = 0.
  bool chain_forces_zero = true;
  bool passed = false;
};

/// Requires a position or momentum state; throws InvalidArgument otherwise.
EigenvectorWitness eigenvector_witness(const StateFunctional& state, std::span<const Rational> eigen_samples,
                                       std::span<const Rational> off_samples);

/// Max over pairs (x, y) of |gns_inner(x Omega, y Omega) - <x phi_l, y phi_l>|,
/// the right side computed in the explicit position model. Throws on empty
/// `words`.
double equivalence_check(const Rational& lambda, std::span<const WeylElement> words);

/// Same comparison for a position or momentum state against its model.
double equivalence_check(const StateFunctional& state, std::span<const WeylElement> words);

}  // namespace weylreps
