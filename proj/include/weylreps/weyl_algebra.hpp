#pragma once

#include <compare>
#include <cstddef>
#include <map>

#include "weylreps/rational.hpp"

namespace weylreps {

/// Label (a, b) of the normal-ordered generator W(a, b) = U_a V_b.
/// (0, 0) is the identity.
struct WeylIndex {
  Rational a;
  Rational b;

  friend bool operator==(const WeylIndex&, const WeylIndex&) = default;
  friend std::strong_ordering operator<=>(const WeylIndex&, const WeylIndex&) = default;
};

/// Coefficients with modulus at or below this are dropped from every element.
inline constexpr double kPruneThreshold = 1e-15;

/// Finite linear combination of normal-ordered Weyl generators.
///
/// Products follow U_a V_b = e^{-iab} V_b U_a, which in normal order reads
///   W(a, b) W(a', b') = e^{i a' b} W(a + a', b + b').
/// Values are immutable once built; every operation returns a new element.
class WeylElement {
 public:
  using Terms = std::map<WeylIndex, Complex>;

  WeylElement() = default;

  static WeylElement identity() { return generator(0, 0); }
  static WeylElement generator(const Rational& a, const Rational& b);
  /// Builds an element from raw terms; non-finite coefficients throw.
  static WeylElement from_terms(const Terms& terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of W(a, b); zero if absent.
  Complex coefficient(const WeylIndex& index) const;

  /// Sum of coefficient moduli. Upper bound for the C*-norm, which is not computed.
  double l1_bound() const;

 private:
  void accumulate(const WeylIndex& index, Complex c);
  void prune();

  friend WeylElement add(const WeylElement&, const WeylElement&);
  friend WeylElement scale(Complex, const WeylElement&);
  friend WeylElement multiply(const WeylElement&, const WeylElement&);
  friend WeylElement adjoint(const WeylElement&);

  Terms terms_;
};

WeylElement add(const WeylElement& x, const WeylElement& y);
WeylElement scale(Complex c, const WeylElement& x);
WeylElement subtract(const WeylElement& x, const WeylElement& y);
WeylElement multiply(const WeylElement& x, const WeylElement& y);
/// W(a, b)* = e^{iab} W(-a, -b), extended conjugate-linearly.
WeylElement adjoint(const WeylElement& x);

/// Phase picked up by W(a, b) W(a', b'): e^{i a' b}.
Complex product_phase(const WeylIndex& left, const WeylIndex& right);

/// Largest coefficient modulus of x - y, taken over the union of supports.
double max_coefficient_deviation(const WeylElement& x, const WeylElement& y);

inline WeylElement operator+(const WeylElement& x, const WeylElement& y) { return add(x, y); }
inline WeylElement operator-(const WeylElement& x, const WeylElement& y) { return subtract(x, y); }
inline WeylElement operator*(const WeylElement& x, const WeylElement& y) { return multiply(x, y); }
inline WeylElement operator*(Complex c, const WeylElement& x) { return scale(c, x); }

}  // namespace weylreps
