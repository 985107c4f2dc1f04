#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

namespace matrep {

/// Ascending eigenvalues with unit-norm eigenvectors stored as columns.
/// The largest-magnitude component of every vector is positive.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd vectors;

  Eigen::Index size() const { return eigenvalues.size(); }
  double ground() const { return eigenvalues(0); }
};

/// Full spectrum of a dense symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps continue until the off-diagonal Frobenius norm falls below
/// 1e-13 ||M||_F. Within a cluster of (numerically) equal eigenvalues,
/// vectors are ordered by the index of their largest component so repeated
/// runs agree bit for bit. Throws ContractViolation for non-symmetric input.
Spectrum eigen_symmetric(const Eigen::MatrixXd &matrix);

/// Ratio of extreme eigenvalues of a symmetric positive matrix; +inf when the
/// smallest eigenvalue is not positive.
double condition_number(const Eigen::VectorXd &ascending_eigenvalues);

// Symmetric tridiagonal helpers. `diag` has n entries, `off` has n-1.

/// All eigenvalues, ascending, by implicit QL with Wilkinson shifts.
std::vector<double> tridiagonal_eigenvalues(std::span<const double> diag,
                                            std::span<const double> off);

/// Lowest eigenvalue by Sturm-sequence bisection.
double tridiagonal_lowest(std::span<const double> diag,
                          std::span<const double> off);

/// Unit eigenvector for the lowest eigenvalue `lambda` by inverse iteration,
/// oriented so the largest-magnitude component is positive.
std::vector<double> tridiagonal_lowest_vector(std::span<const double> diag,
                                              std::span<const double> off,
                                              double lambda);

}  // namespace matrep
