#pragma once

// Reference computations that share no code path with the library routines
// they check: direct sums, brute-force quadrature, closed-form algebra.

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "matrep/basis.hpp"
#include "matrep/hermite.hpp"
#include "matrep/oracle.hpp"

namespace matrep::reference {

/// Hermite functions from explicit polynomial coefficients in long double,
/// usable for low degrees only (n <= 12).
inline long double explicit_hermite(int n, long double x) {
  // Physicists' H_n via the monomial expansion.
  long double h = 0.0L;
  for (int m = 0; m <= n / 2; ++m) {
    long double term = std::tgamma(static_cast<long double>(n + 1)) /
                       (std::tgamma(static_cast<long double>(m + 1)) *
                        std::tgamma(static_cast<long double>(n - 2 * m + 1)));
    term *= std::pow(2.0L * x, n - 2 * m) * (m % 2 == 0 ? 1.0L : -1.0L);
    h += term;
  }
  const long double norm = std::sqrt(std::pow(2.0L, n) *
                                     std::tgamma(static_cast<long double>(n + 1)) *
                                     std::sqrt(std::numbers::pi_v<long double>));
  return h * std::exp(-x * x / 2.0L) / norm;
}

/// D_N(r, s) as the plain N-term sum.
inline double direct_identity_sum(int n, double r, double s) {
  const auto a = hermite_functions(n - 1, r);
  const auto b = hermite_functions(n - 1, s);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

/// R_N(r, s) as the explicit double sum over the banded r^2 matrix.
inline double direct_r2_sum(int n, double r, double s) {
  const auto a = hermite_functions(n - 1, r);
  const auto b = hermite_functions(n - 1, s);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    sum += a[i] * (i + 0.5) * b[i];
    if (i + 2 < n) {
      const double c = 0.5 * std::sqrt((i + 1.0) * (i + 2.0));
      sum += a[i] * c * b[i + 2] + a[i + 2] * c * b[i];
    }
  }
  return sum;
}

/// Integral over a wide window with the adaptive trapezoid oracle.
inline double brute_integral(const std::function<double(double)> &f,
                             double half_width = 40.0) {
  return integrate(f, half_width, 1e-13);
}

/// Central finite-difference second derivative.
inline double second_difference(const std::function<double(double)> &f, double x,
                                 double h = 1e-3) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

inline std::mt19937_64 seeded_rng() { return std::mt19937_64(20261016ULL); }

}  // namespace matrep::reference

namespace matrep::reference {

/// Overlap matrix of the orthonormal family from a plain trapezoid sum.
inline Eigen::MatrixXd grid_overlap(const BasisSet &basis, double half_width, double h) {
  std::vector<double> points;
  for (double r = -half_width; r <= half_width + 1e-12; r += h) points.push_back(r);
  const Eigen::MatrixXd phi = basis.values(points);
  return h * phi * phi.transpose();
}

}  // namespace matrep::reference
