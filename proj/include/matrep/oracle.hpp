#pragma once

#include <functional>

#include "matrep/operators.hpp"
#include "matrep/spectral.hpp"

namespace matrep {

/// Gaussian-sum potential plus an optional quadratic term q r^2, used only
/// for the oscillator sanity case.
struct OraclePotential {
  PotentialSpec gaussians;
  double quadratic = 0.0;

  double operator()(double r) const { return gaussians(r) + quadratic * r * r; }
};

struct OracleSolution {
  /// Richardson-extrapolated ground energy.
  double eigenvalue = 0.0;
  double coarse_eigenvalue = 0.0;  // step h
  double fine_eigenvalue = 0.0;    // step h/2
  /// |E(h) - E(h/2)|.
  double richardson_error = 0.0;
  double half_width = 0.0;
  int npoints = 0;
  /// Ground state on the fine interior grid, trapezoid-normalized.
  SampledWave wave;
};

inline constexpr double kOracleHalfWidth = 30.0;
inline constexpr int kOraclePoints = 12000;

/// Ground state of -d^2/dr^2 + v(r) on [-L, L] with Dirichlet ends, from the
/// 3-point finite-difference matrix on `npoints` interior points and again
/// at half the step. Throws ResolutionInsufficient when the two energies
/// differ by more than `tolerance`.
OracleSolution fd_ground_state(const OraclePotential &v, double half_width = kOracleHalfWidth,
                               int npoints = kOraclePoints, double tolerance = 1e-4);

/// Trapezoid rule on [-L, L] with interval halving until two successive
/// estimates agree to `tol`. NonConvergence after 24 halvings.
double integrate(const std::function<double(double)> &f, double half_width, double tol);

}  // namespace matrep
