#include "matrep/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "matrep/basis.hpp"
#include "matrep/eigen.hpp"
#include "matrep/errors.hpp"
#include "matrep/hermite.hpp"

namespace matrep {

double QuadratureRule::integrate(const std::function<double(double)> &f) const {
  double sum = 0.0;
  for (std::size_t k = 0; k < nodes.size(); ++k) sum += plain_weights[k] * f(nodes[k]);
  return sum;
}

QuadratureRule QuadratureRule::refined() const {
  if (scheme == QuadratureScheme::GaussHermite) {
    return gauss_hermite_rule(std::min(2 * order, kMaxGaussHermiteOrder));
  }
  return trapezoid_rule(half_width, 0.5 * step);
}

QuadratureRule gauss_hermite_rule(int m) {
  if (m < 1 || m > kMaxGaussHermiteOrder) {
    throw NumericalError(ErrorKind::ContractViolation,
                         "Gauss-Hermite order " + std::to_string(m) +
                             " outside [1, " +
                             std::to_string(kMaxGaussHermiteOrder) + "]");
  }
  // Jacobi matrix of the monic Hermite recurrence for weight exp(-r^2).
  std::vector<double> diag(static_cast<std::size_t>(m), 0.0);
  std::vector<double> off(static_cast<std::size_t>(m > 0 ? m - 1 : 0));
  for (int k = 1; k < m; ++k) off[k - 1] = std::sqrt(0.5 * k);
  std::vector<double> nodes = tridiagonal_eigenvalues(diag, off);

  QuadratureRule rule;
  rule.scheme = QuadratureScheme::GaussHermite;
  rule.order = m;
  std::vector<double> phi(static_cast<std::size_t>(m) + 2);
  for (double &x : nodes) {
    for (int newton = 0; newton < 3; ++newton) {
      hermite_recurrence(x, phi);
      const double derivative = std::sqrt(0.5 * m) * phi[m - 1] -
                                std::sqrt(0.5 * (m + 1)) * phi[m + 1];
      if (derivative == 0.0) break;
      x -= phi[m] / derivative;
    }
  }
  // Symmetrize about the origin.
  for (int k = 0; k < m / 2; ++k) {
    const double avg = 0.5 * (nodes[m - 1 - k] - nodes[k]);
    nodes[k] = -avg;
    nodes[m - 1 - k] = avg;
  }
  if (m % 2 == 1) nodes[m / 2] = 0.0;

  for (double x : nodes) {
    hermite_recurrence(x, std::span<double>(phi.data(), static_cast<std::size_t>(m)));
    double christoffel = 0.0;
    for (int k = 0; k < m; ++k) christoffel += phi[k] * phi[k];
    const double plain = 1.0 / christoffel;
    rule.nodes.push_back(x);
    rule.plain_weights.push_back(plain);
    rule.weights.push_back(plain * std::exp(-x * x));
  }
  return rule;
}

QuadratureRule trapezoid_rule(double half_width, double step) {
  if (!(half_width > 0.0) || !(step > 0.0)) {
    throw NumericalError(ErrorKind::ContractViolation,
                         "trapezoid rule needs positive width and step");
  }
  const auto intervals = static_cast<std::size_t>(std::ceil(2.0 * half_width / step - 1e-9));
  const double h = 2.0 * half_width / static_cast<double>(intervals);
  QuadratureRule rule;
  rule.scheme = QuadratureScheme::Trapezoid;
  rule.half_width = half_width;
  rule.step = h;
  rule.nodes.resize(intervals + 1);
  rule.weights.assign(intervals + 1, h);
  for (std::size_t k = 0; k <= intervals; ++k) {
    rule.nodes[k] = -half_width + h * static_cast<double>(k);
  }
  rule.weights.front() *= 0.5;
  rule.weights.back() *= 0.5;
  rule.plain_weights = rule.weights;
  return rule;
}

QuadratureRule default_rule(const BasisSet &basis) {
  if (basis.raw().is_oscillator()) {
    const int top = basis.raw().degrees.back();
    return gauss_hermite_rule(std::min(std::max(2 * (top + 1) + 20, 64), kMaxGaussHermiteOrder));
  }
  const double n = static_cast<double>(basis.size());
  const double half_width = std::max(1.5 * std::sqrt(n) + 10.0, basis.support_half_width());
  return trapezoid_rule(half_width, 0.01);
}

}  // namespace matrep
