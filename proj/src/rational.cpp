#include "weylreps/rational.hpp"

#include <cctype>
#include <cmath>
#include <functional>

#include "weylreps/error.hpp"

namespace weylreps {

namespace {

// Accepts an optional sign followed by one or more decimal digits.
bool is_integer_token(std::string_view s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw InvalidArgument("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

  if (!is_integer_token(num, true)) {
    throw InvalidArgument("malformed rational '" + std::string(text) + "' at offset 0");
  }
  if (slash != std::string_view::npos && !is_integer_token(den, false)) {
    throw InvalidArgument("malformed rational '" + std::string(text) + "' at offset " + std::to_string(slash + 1));
  }

  std::string num_str(num.front() == '+' ? num.substr(1) : num);
  mpz_class n(num_str, 10);
  mpz_class d(1);
  if (slash != std::string_view::npos) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) {
      throw InvalidArgument("rational '" + std::string(text) + "' has zero denominator");
    }
  }
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const { return value_.get_str(10); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) throw InvalidArgument("rational division by zero");
  return Rational(mpq_class(x.value_ / y.value_));
}

std::size_t Rational::hash() const {
  std::size_t h = std::hash<std::string>{}(value_.get_num().get_str(16));
  h ^= std::hash<std::string>{}(value_.get_den().get_str(16)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Complex phase(const Rational& theta) {
  if (theta.is_zero()) return {1.0, 0.0};
  const double t = theta.to_double();
  return {std::cos(t), std::sin(t)};
}

}  // namespace weylreps
