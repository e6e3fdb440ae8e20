#include "weylreps/weyl_algebra.hpp"

#include <algorithm>
#include <cmath>

#include "weylreps/error.hpp"

namespace weylreps {

namespace {

bool is_finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

WeylElement WeylElement::generator(const Rational& a, const Rational& b) {
  WeylElement e;
  e.terms_.emplace(WeylIndex{a, b}, Complex{1.0, 0.0});
  return e;
}

WeylElement WeylElement::from_terms(const Terms& terms) {
  WeylElement e;
  for (const auto& [index, c] : terms) {
    if (!is_finite(c)) throw InvalidArgument("non-finite coefficient");
    e.accumulate(index, c);
  }
  e.prune();
  return e;
}

Complex WeylElement::coefficient(const WeylIndex& index) const {
  const auto it = terms_.find(index);
  return it == terms_.end() ? Complex{} : it->second;
}

double WeylElement::l1_bound() const {
  double total = 0.0;
  for (const auto& [index, c] : terms_) total += std::abs(c);
  return total;
}

void WeylElement::accumulate(const WeylIndex& index, Complex c) {
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (!inserted) it->second += c;
}

void WeylElement::prune() {
  std::erase_if(terms_, [](const auto& kv) { return std::abs(kv.second) <= kPruneThreshold; });
}

WeylElement add(const WeylElement& x, const WeylElement& y) {
  WeylElement r = x;
  for (const auto& [index, c] : y.terms_) r.accumulate(index, c);
  r.prune();
  return r;
}

WeylElement scale(Complex c, const WeylElement& x) {
  if (!is_finite(c)) throw InvalidArgument("non-finite scalar");
  WeylElement r;
  if (c == Complex{}) return r;
  for (const auto& [index, coeff] : x.terms_) r.terms_.emplace(index, c * coeff);
  r.prune();
  return r;
}

WeylElement subtract(const WeylElement& x, const WeylElement& y) { return add(x, scale(-1.0, y)); }

Complex product_phase(const WeylIndex& left, const WeylIndex& right) { return phase(right.a * left.b); }

WeylElement multiply(const WeylElement& x, const WeylElement& y) {
  WeylElement r;
  for (const auto& [lhs, c] : x.terms_) {
    for (const auto& [rhs, d] : y.terms_) {
      r.accumulate(WeylIndex{lhs.a + rhs.a, lhs.b + rhs.b}, c * d * product_phase(lhs, rhs));
    }
  }
  r.prune();
  return r;
}

WeylElement adjoint(const WeylElement& x) {
  WeylElement r;
  for (const auto& [index, c] : x.terms_) {
    r.terms_.emplace(WeylIndex{-index.a, -index.b}, std::conj(c) * phase(index.a * index.b));
  }
  return r;
}

double max_coefficient_deviation(const WeylElement& x, const WeylElement& y) {
  double worst = 0.0;
  for (const auto& [index, c] : x.terms()) worst = std::max(worst, std::abs(c - y.coefficient(index)));
  for (const auto& [index, c] : y.terms()) {
    if (!x.terms().contains(index)) worst = std::max(worst, std::abs(c));
  }
  return worst;
}

}  // namespace weylreps
