#include "weylreps/position_rep.hpp"

#include <algorithm>
#include <cmath>

#include "weylreps/error.hpp"

namespace weylreps {

namespace {

void drop_zeros(FiniteSupportVector::Amplitudes& amps) {
  std::erase_if(amps, [](const auto& kv) { return kv.second == Complex{}; });
}

void require_same_flavor(const FiniteSupportVector& u, const FiniteSupportVector& v) {
  if (u.flavor() != v.flavor()) throw FlavorMismatch("position and momentum vectors cannot be combined");
}

FiniteSupportVector phase_action(const Rational& t, const FiniteSupportVector& v) {
  FiniteSupportVector::Amplitudes out;
  for (const auto& [x, c] : v.amplitudes()) out.emplace(x, c * phase(t * x));
  return {v.flavor(), std::move(out)};
}

FiniteSupportVector shift_action(const Rational& offset, const FiniteSupportVector& v) {
  FiniteSupportVector::Amplitudes out;
  for (const auto& [x, c] : v.amplitudes()) out.emplace(x + offset, c);
  return {v.flavor(), std::move(out)};
}

FiniteSupportVector multiply_by_point(const FiniteSupportVector& v) {
  FiniteSupportVector::Amplitudes out;
  for (const auto& [x, c] : v.amplitudes()) out.emplace(x, c * x.to_double());
  return {v.flavor(), std::move(out)};
}

}  // namespace

FiniteSupportVector::FiniteSupportVector(Flavor flavor, Amplitudes amplitudes)
    : flavor_(flavor), amplitudes_(std::move(amplitudes)) {
  for (const auto& [x, c] : amplitudes_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw InvalidArgument("non-finite amplitude");
  }
  drop_zeros(amplitudes_);
}

FiniteSupportVector FiniteSupportVector::basis(const Rational& point, Flavor flavor) {
  return {flavor, Amplitudes{{point, Complex{1.0, 0.0}}}};
}

Complex FiniteSupportVector::amplitude(const Rational& point) const {
  const auto it = amplitudes_.find(point);
  return it == amplitudes_.end() ? Complex{} : it->second;
}

double FiniteSupportVector::norm() const {
  double sum = 0.0;
  for (const auto& [x, c] : amplitudes_) sum += std::norm(c);
  return std::sqrt(sum);
}

Complex inner(const FiniteSupportVector& u, const FiniteSupportVector& v) {
  require_same_flavor(u, v);
  Complex total{};
  for (const auto& [x, c] : u.amplitudes()) {
    const auto it = v.amplitudes().find(x);
    if (it != v.amplitudes().end()) total += std::conj(c) * it->second;
  }
  return total;
}

FiniteSupportVector add(const FiniteSupportVector& u, const FiniteSupportVector& v) {
  require_same_flavor(u, v);
  auto out = u.amplitudes();
  for (const auto& [x, c] : v.amplitudes()) {
    auto [it, inserted] = out.try_emplace(x, c);
    if (!inserted) it->second += c;
  }
  return {u.flavor(), std::move(out)};
}

FiniteSupportVector scale(Complex c, const FiniteSupportVector& v) {
  FiniteSupportVector::Amplitudes out;
  for (const auto& [x, amp] : v.amplitudes()) out.emplace(x, c * amp);
  return {v.flavor(), std::move(out)};
}

FiniteSupportVector subtract(const FiniteSupportVector& u, const FiniteSupportVector& v) {
  return add(u, scale(-1.0, v));
}

double max_amplitude_deviation(const FiniteSupportVector& u, const FiniteSupportVector& v) {
  require_same_flavor(u, v);
  double worst = 0.0;
  for (const auto& [x, c] : u.amplitudes()) worst = std::max(worst, std::abs(c - v.amplitude(x)));
  for (const auto& [x, c] : v.amplitudes()) {
    if (!u.amplitudes().contains(x)) worst = std::max(worst, std::abs(c));
  }
  return worst;
}

FiniteSupportVector apply_U(const Rational& a, const FiniteSupportVector& v) {
  if (a.is_zero()) return v;
  return v.flavor() == Flavor::Position ? phase_action(a, v) : shift_action(a, v);
}

FiniteSupportVector apply_V(const Rational& b, const FiniteSupportVector& v) {
  if (b.is_zero()) return v;
  return v.flavor() == Flavor::Position ? shift_action(-b, v) : phase_action(b, v);
}

FiniteSupportVector apply(const WeylElement& x, const FiniteSupportVector& v) {
  FiniteSupportVector total(v.flavor());
  for (const auto& [index, c] : x.terms()) {
    total = add(total, scale(c, apply_U(index.a, apply_V(index.b, v))));
  }
  return total;
}

FiniteSupportVector apply_Q(const FiniteSupportVector& v) {
  if (v.flavor() != Flavor::Position) {
    throw NonexistentObservable("nonexistent observable: the position operator does not exist in the momentum model");
  }
  return multiply_by_point(v);
}

FiniteSupportVector apply_P(const FiniteSupportVector& v) {
  if (v.flavor() != Flavor::Momentum) {
    throw NonexistentObservable("nonexistent observable: the momentum operator does not exist in the position model");
  }
  return multiply_by_point(v);
}

FiniteSupportVector finite_difference_generator(const Rational& t, const FiniteSupportVector& v) {
  if (t.is_zero()) throw InvalidArgument("finite_difference_generator: step must be nonzero");
  const FiniteSupportVector moved = v.flavor() == Flavor::Position ? apply_U(t, v) : apply_V(t, v);
  return scale(Complex{0.0, -1.0} / t.to_double(), subtract(moved, v));
}

double weyl_relation_check(const Rational& a, const Rational& b, const Rational& point, Flavor flavor) {
  const auto phi = FiniteSupportVector::basis(point, flavor);
  const auto lhs = apply_U(a, apply_V(b, phi));
  const auto rhs = scale(phase(-(a * b)), apply_V(b, apply_U(a, phi)));
  return max_amplitude_deviation(lhs, rhs);
}

Complex v_direction_matrix_element(const Rational& b, const Rational& lambda) {
  const auto phi = FiniteSupportVector::basis(lambda, Flavor::Position);
  return inner(phi, apply_V(b, phi));
}

Complex u_direction_matrix_element(const Rational& a, const Rational& mu) {
  const auto phi = FiniteSupportVector::basis(mu, Flavor::Momentum);
  return inner(phi, apply_U(a, phi));
}

}  // namespace weylreps
