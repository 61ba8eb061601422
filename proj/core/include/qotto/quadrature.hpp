#pragma once

#include <cstddef>
#include <vector>

namespace qotto {

/// Nodes and probability weights (summing to 1), nodes ascending.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Hermite rule for the standard normal density: exact for
/// E[p(X)], X ~ N(0, 1), with p of degree < 2 * order.
QuadratureRule gauss_hermite_normal(std::size_t order);

/// Gauss-Legendre rule for the uniform density on [-1, 1].
QuadratureRule gauss_legendre_uniform(std::size_t order);

}  // namespace qotto
