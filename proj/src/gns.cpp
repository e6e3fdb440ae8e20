#include "weylreps/gns.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "weylreps/error.hpp"
#include "weylreps/text_format.hpp"

namespace weylreps {

namespace {

WeylElement group_element(Direction direction, const Rational& t) {
  return direction == Direction::U ? WeylElement::generator(t, 0) : WeylElement::generator(0, t);
}

Direction other(Direction d) { return d == Direction::U ? Direction::V : Direction::U; }

void require_same_owner(const GnsVector& u, const GnsVector& v) {
  if (!(u.owner == v.owner)) {
    throw OwnerMismatch("GNS vectors of " + u.owner.describe() + " and " + v.owner.describe() + " cannot be combined");
  }
}

ReducedVector reduce_unchecked(const GnsVector& v) {
  ReducedVector r;
  const Rational& p = v.owner.parameter();
  const bool position = v.owner.kind() == StateKind::Position;
  r.flavor = position ? Flavor::Position : Flavor::Momentum;
  for (const auto& [index, c] : v.word.terms()) {
    const Rational& key = position ? index.b : index.a;
    const Complex amp = position ? c * phase(index.a * (p - index.b)) : c * phase(index.b * p);
    auto [it, inserted] = r.amplitudes.try_emplace(key, amp);
    if (!inserted) it->second += amp;
  }
  std::erase_if(r.amplitudes, [](const auto& kv) { return kv.second == Complex{}; });
  return r;
}

}  // namespace

GnsVector cyclic_vector(const StateFunctional& state) { return {WeylElement::identity(), state}; }

Complex gns_inner(const GnsVector& u, const GnsVector& v) {
  require_same_owner(u, v);
  return u.owner.evaluate(multiply(adjoint(u.word), v.word));
}

GnsVector gns_apply(const WeylElement& x, const GnsVector& v) { return {multiply(x, v.word), v.owner}; }

double gns_norm(const GnsVector& v) {
  if (v.owner.kind() == StateKind::Vacuum) {
    return std::sqrt(std::max(0.0, gns_inner(v, v).real()));
  }
  const ReducedVector r = reduce_unchecked(v);
  double sum = 0.0;
  for (const auto& [key, c] : r.amplitudes) sum += std::norm(c);
  return std::sqrt(sum);
}

double gns_distance(const GnsVector& u, const GnsVector& v) {
  require_same_owner(u, v);
  return gns_norm({subtract(u.word, v.word), u.owner});
}

bool is_null(const GnsVector& v) {
  const double n = gns_norm(v);
  return v.owner.kind() == StateKind::Vacuum ? n * n < 1e-12 : n == 0.0;
}

ReducedVector reduce_position(const GnsVector& v) {
  if (v.owner.kind() != StateKind::Position) {
    throw InvalidArgument("reduce_position: owner " + v.owner.describe() + " is not a position state");
  }
  return reduce_unchecked(v);
}

ReducedVector reduce_momentum(const GnsVector& v) {
  if (v.owner.kind() != StateKind::Momentum) {
    throw InvalidArgument("reduce_momentum: owner " + v.owner.describe() + " is not a momentum state");
  }
  return reduce_unchecked(v);
}

ReducedVector reduce(const GnsVector& v) {
  if (v.owner.kind() == StateKind::Vacuum) throw InvalidArgument("reduce: the vacuum has no canonical reduction");
  return reduce_unchecked(v);
}

Complex reduced_inner(const ReducedVector& u, const ReducedVector& v) {
  if (u.flavor != v.flavor) throw FlavorMismatch("reduced vectors of different flavors");
  Complex total{};
  for (const auto& [key, c] : u.amplitudes) {
    const auto it = v.amplitudes.find(key);
    if (it != v.amplitudes.end()) total += std::conj(c) * it->second;
  }
  return total;
}

FiniteSupportVector to_model_vector(const ReducedVector& r, const Rational& parameter) {
  FiniteSupportVector::Amplitudes amps;
  for (const auto& [key, c] : r.amplitudes) {
    amps.emplace(r.flavor == Flavor::Position ? parameter - key : parameter + key, c);
  }
  return {r.flavor, std::move(amps)};
}

std::vector<ScanPoint> continuity_scan(const StateFunctional& state, Direction direction,
                                       std::span<const Rational> grid) {
  if (grid.empty()) throw InvalidArgument("continuity_scan: empty grid");
  std::vector<ScanPoint> out;
  out.reserve(grid.size());
  for (const auto& t : grid) out.push_back({t, state.evaluate(group_element(direction, t))});
  return out;
}

std::string scan_to_csv(std::span<const ScanPoint> points) {
  std::string csv = "parameter,re,im\n";
  for (const auto& p : points) {
    csv += p.parameter.str();
    csv += ',';
    csv += format_double(p.value.real());
    csv += ',';
    csv += format_double(p.value.imag());
    csv += '\n';
  }
  return csv;
}

bool is_regular_direction(const StateFunctional& state, Direction direction) {
  switch (state.kind()) {
    case StateKind::Position:
      return direction == Direction::U;
    case StateKind::Momentum:
      return direction == Direction::V;
    case StateKind::Vacuum:
      return true;
  }
  return false;
}

EigenvectorWitness eigenvector_witness(const StateFunctional& state, std::span<const Rational> eigen_samples,
                                       std::span<const Rational> off_samples) {
  if (state.kind() == StateKind::Vacuum) {
    throw InvalidArgument("eigenvector_witness: requires a position or momentum state");
  }
  const bool position = state.kind() == StateKind::Position;
  const Direction eigen = position ? Direction::U : Direction::V;
  const Direction off = other(eigen);
  const GnsVector omega = cyclic_vector(state);

  EigenvectorWitness w{state, eigen};

  for (const auto& t : eigen_samples) {
    const GnsVector moved = gns_apply(group_element(eigen, t), omega);
    const GnsVector expected{scale(phase(t * state.parameter()), omega.word), state};
    w.max_eigen_distance = std::max(w.max_eigen_distance, gns_distance(moved, expected));
  }

  for (const auto& s : off_samples) {
    const WeylElement h = group_element(off, s);
    const Complex diagonal = gns_inner(omega, gns_apply(h, omega));
    if (!s.is_zero() && diagonal != Complex{}) w.off_direction_vanishes = false;

    bool forced = s.is_zero();
    for (const auto& t : eigen_samples) {
      // position: U_{-t} V_s U_t = e^{its} V_s;  momentum: V_{-t} U_s V_t = e^{-its} U_s
      const Complex k = phase(position ? t * s : -(t * s));
      const WeylElement conjugated = multiply(multiply(group_element(eigen, -t), h), group_element(eigen, t));
      const Complex middle = gns_inner(omega, gns_apply(conjugated, omega));
      w.proof_chain_deviation = std::max(
          {w.proof_chain_deviation, std::abs(middle - k * diagonal), std::abs(middle - diagonal),
           max_coefficient_deviation(conjugated, scale(k, h))});
      if (std::abs(k - 1.0) > 1e-6) forced = true;
    }
    if (!forced) w.chain_forces_zero = false;
  }

  w.passed = w.max_eigen_distance < 1e-12 && w.off_direction_vanishes && w.proof_chain_deviation < 1e-12 &&
             w.chain_forces_zero;
  return w;
}

double equivalence_check(const StateFunctional& state, std::span<const WeylElement> words) {
  if (words.empty()) throw InvalidArgument("equivalence_check: empty word list");
  if (state.kind() == StateKind::Vacuum) throw InvalidArgument("equivalence_check: requires a position or momentum state");
  const Flavor flavor = state.kind() == StateKind::Position ? Flavor::Position : Flavor::Momentum;
  const auto phi = FiniteSupportVector::basis(state.parameter(), flavor);

  std::vector<FiniteSupportVector> model;
  model.reserve(words.size());
  for (const auto& x : words) model.push_back(apply(x, phi));

  double worst = 0.0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      const Complex via_state = gns_inner({words[i], state}, {words[j], state});
      worst = std::max(worst, std::abs(via_state - inner(model[i], model[j])));
    }
  }
  return worst;
}

double equivalence_check(const Rational& lambda, std::span<const WeylElement> words) {
  return equivalence_check(StateFunctional::position(lambda), words);
}

}  // namespace weylreps
