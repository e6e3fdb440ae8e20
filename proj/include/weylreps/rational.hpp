#pragma once

#include <compare>
#include <complex>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace weylreps {

using Complex = std::complex<double>;

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Parses "p/q", "p" or "-p/q". Whitespace is not allowed. Throws
  /// InvalidArgument with the offending offset in the message.
  static Rational parse(std::string_view text);

  std::string str() const;
  double to_double() const { return value_.get_d(); }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  Rational abs() const;

  const mpq_class& gmp() const { return value_; }

  friend Rational operator+(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ + y.value_)); }
  friend Rational operator-(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ - y.value_)); }
  friend Rational operator*(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ * y.value_)); }
  friend Rational operator/(const Rational& x, const Rational& y);
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& x, const Rational& y) { return cmp(x.value_, y.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    const int c = cmp(x.value_, y.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  std::size_t hash() const;

 private:
  mpq_class value_;
};

/// e^{i theta}, evaluated transcendentally from the exact argument.
Complex phase(const Rational& theta);

}  // namespace weylreps

template <>
struct std::hash<weylreps::Rational> {
  std::size_t operator()(const weylreps::Rational& r) const noexcept { return r.hash(); }
};
