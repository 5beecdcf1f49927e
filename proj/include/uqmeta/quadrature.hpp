// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace uqmeta {

/// One-dimensional quadrature rule: nodes ascending, weights matching.
struct QuadratureRule {
  std::vector<double> points;
  std::vector<double> weights;
  std::size_t size() const { return points.size(); }
};

/// Gauss-Legendre rule on [-1,1] for the probability measure dx/2
/// (weights sum to 1). Computed via the Jacobi-matrix eigendecomposition.
QuadratureRule gauss_legendre(int n);

/// Gauss-Hermite rule for the standard normal measure (probabilists'
/// convention, weights sum to 1).
QuadratureRule gauss_hermite(int n);

/// Clenshaw-Curtis rule on [-1,1] for the measure dx/2 (weights sum to 1).
/// n = 1 gives the midpoint; n >= 2 the Chebyshev extrema -cos(pi*k/(n-1)).
QuadratureRule clenshaw_curtis(int n);

}  // namespace uqmeta
