#pragma once

#include <Eigen/Dense>
#include <vector>

#include "matrep/basis.hpp"
#include "matrep/eigen.hpp"
#include "matrep/grid.hpp"
#include "matrep/operators.hpp"

namespace matrep {

/// Spectrum of an operator matrix (cyclic Jacobi).
Spectrum eigen_symmetric(const OperatorMatrix &matrix);

/// Real function sampled on a uniform axis.
struct SampledWave {
  UniformAxis axis;
  std::vector<double> values;

  /// Trapezoid estimate of the square norm.
  double norm_squared() const;
};

/// psi(r) = sum_i coeffs_i chi_i(r) on every axis point.
SampledWave synthesize(const BasisSet &basis, const Eigen::VectorXd &coeffs,
                       const UniformAxis &axis);

struct PeakMetrics {
  double max_abs = 0.0;
  double peak_position = 0.0;
  /// Largest |r| with |psi(r)| > 0.01 max_abs.
  double effective_range = 0.0;
  /// Full width at half maximum of the principal (global |psi|) peak.
  double fwhm = 0.0;
};

/// Requires axis step <= 0.05; DegenerateInput for an identically zero wave.
PeakMetrics peak_metrics(const SampledWave &wave);

}  // namespace matrep
