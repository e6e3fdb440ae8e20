#include "weylreps/states.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "weylreps/error.hpp"

namespace weylreps {

Complex StateFunctional::on_generator(const WeylIndex& index) const {
  switch (kind_) {
    case StateKind::Position:
      return index.b.is_zero() ? phase(index.a * parameter_) : Complex{};
    case StateKind::Momentum:
      return index.a.is_zero() ? phase(index.b * parameter_) : Complex{};
    case StateKind::Vacuum: {
      const Rational& a = index.a;
      const Rational& b = index.b;
      const double damping = std::exp(-(a * a + b * b).to_double() / 4.0);
      return phase(-(a * b) / Rational(2)) * damping;
    }
  }
  return {};
}

Complex StateFunctional::evaluate(const WeylElement& x) const {
  Complex total{};
  for (const auto& [index, c] : x.terms()) total += c * on_generator(index);
  return total;
}

std::string StateFunctional::describe() const {
  switch (kind_) {
    case StateKind::Position:
      return "position:" + parameter_.str();
    case StateKind::Momentum:
      return "momentum:" + parameter_.str();
    case StateKind::Vacuum:
      return "vacuum";
  }
  return "?";
}

Eigen::MatrixXcd gram_matrix(const StateFunctional& state, std::span<const WeylElement> basis) {
  if (basis.empty()) throw InvalidArgument("gram_matrix: empty basis");
  const auto n = static_cast<Eigen::Index>(basis.size());
  std::vector<WeylElement> adjoints;
  adjoints.reserve(basis.size());
  for (const auto& x : basis) adjoints.push_back(adjoint(x));

  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      g(i, j) = state.evaluate(multiply(adjoints[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]));
    }
  }
  return g;
}

double min_hermitian_eigenvalue(const Eigen::MatrixXcd& m) {
  // The solver reads only the lower triangle; symmetrize first so both
  // halves contribute.
  const Eigen::MatrixXcd h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw EigenFailure("Hermitian eigensolver did not converge");
  return solver.eigenvalues().minCoeff();
}

double check_positivity(const StateFunctional& state, std::span<const WeylElement> basis) {
  if (basis.size() > kMaxGramBasis) {
    throw InvalidArgument("check_positivity: basis larger than " + std::to_string(kMaxGramBasis));
  }
  return min_hermitian_eigenvalue(gram_matrix(state, basis));
}

}  // namespace weylreps
