#include "qotto/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "qotto/error.hpp"

namespace qotto {

namespace {

// Golub-Welsch: the nodes are the eigenvalues of the symmetric Jacobi matrix
// of the orthogonal-polynomial recurrence, the weights are the squared first
// eigenvector components times the total mass (1 here).
template <class OffDiagonal>
QuadratureRule golub_welsch(std::size_t order, OffDiagonal&& off_diagonal) {
  if (order == 0) {
    throw DomainError("quadrature: order must be at least 1");
  }
  const auto n = static_cast<Eigen::Index>(order);
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(std::max<Eigen::Index>(n - 1, 0));
  for (Eigen::Index k = 1; k < n; ++k) {
    sub(k - 1) = off_diagonal(static_cast<double>(k));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("quadrature: tridiagonal eigensolver failed");
  }
  QuadratureRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double v0 = solver.eigenvectors()(0, i);
    rule.nodes[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    rule.weights[static_cast<std::size_t>(i)] = v0 * v0;
  }
  // Both weight functions are even; symmetrise to remove eigensolver noise.
  for (std::size_t i = 0, j = order - 1; i < j; ++i, --j) {
    const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.nodes[i] = -x;
    rule.nodes[j] = x;
    rule.weights[i] = w;
    rule.weights[j] = w;
  }
  if (order % 2 == 1) {
    rule.nodes[order / 2] = 0.0;
  }
  return rule;
}

}  // namespace

QuadratureRule gauss_hermite_normal(std::size_t order) {
  // He_{k+1} = x He_k - k He_{k-1}
  return golub_welsch(order, [](double k) { return std::sqrt(k); });
}

QuadratureRule gauss_legendre_uniform(std::size_t order) {
  return golub_welsch(order, [](double k) { return k / std::sqrt(4.0 * k * k - 1.0); });
}

}  // namespace qotto
