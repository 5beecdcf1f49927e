// SPDX-License-Identifier: Apache-2.0
#include "uqmeta/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "uqmeta/errors.hpp"

namespace uqmeta {

namespace {

// Golub-Welsch: nodes are the eigenvalues of the symmetric tridiagonal
// Jacobi matrix of the orthonormal recurrence, weights the squared first
// eigenvector components scaled by the measure's total mass (1 here).
QuadratureRule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& offdiag) {
  const int n = static_cast<int>(diag.size());
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    jacobi(i, i) = diag(i);
    if (i + 1 < n) {
      jacobi(i, i + 1) = offdiag(i);
      jacobi(i + 1, i) = offdiag(i);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  if (es.info() != Eigen::Success) throw UqError("quadrature: Jacobi eigensolve failed");

  QuadratureRule rule;
  rule.points.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.points[i] = es.eigenvalues()(i);  // ascending
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = v0 * v0;
  }
  // Enforce exact symmetry of the node set; the measures here are even.
  for (int i = 0, j = n - 1; i < j; ++i, --j) {
    const double p = 0.5 * (rule.points[j] - rule.points[i]);
    rule.points[i] = -p;
    rule.points[j] = p;
    const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.weights[i] = rule.weights[j] = w;
  }
  if (n % 2 == 1) rule.points[n / 2] = 0.0;
  return rule;
}

}  // namespace

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw UqError("gauss_legendre: n must be >= 1");
  if (n == 1) return {{0.0}, {1.0}};
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd off(n - 1);
  for (int k = 1; k < n; ++k) off(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
  return golub_welsch(diag, off);
}

QuadratureRule gauss_hermite(int n) {
  if (n < 1) throw UqError("gauss_hermite: n must be >= 1");
  if (n == 1) return {{0.0}, {1.0}};
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd off(n - 1);
  for (int k = 1; k < n; ++k) off(k - 1) = std::sqrt(static_cast<double>(k));
  return golub_welsch(diag, off);
}

QuadratureRule clenshaw_curtis(int n) {
  if (n < 1) throw UqError("clenshaw_curtis: n must be >= 1");
  if (n == 1) return {{0.0}, {1.0}};
  if (n == 2) return {{-1.0, 1.0}, {0.5, 0.5}};

  const int m = n - 1;
  QuadratureRule rule;
  rule.points.resize(n);
  rule.weights.resize(n);
  for (int k = 0; k <= m; ++k) {
    const double theta = std::numbers::pi * k / m;
    rule.points[k] = -std::cos(theta);
    double s = 1.0;
    for (int j = 1; j <= m / 2; ++j) {
      const double b = (2 * j == m) ? 1.0 : 2.0;
      s -= b * std::cos(2.0 * j * theta) / (4.0 * j * j - 1.0);
    }
    const double c = (k == 0 || k == m) ? 1.0 : 2.0;
    rule.weights[k] = c * s / m;  // sums to 2 over [-1,1]; halve for dx/2
  }
  for (double& w : rule.weights) w *= 0.5;
  if (m % 2 == 0) rule.points[m / 2] = 0.0;
  return rule;
}

}  // namespace uqmeta
