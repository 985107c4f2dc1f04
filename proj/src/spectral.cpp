#include "matrep/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "matrep/errors.hpp"

namespace matrep {

Spectrum eigen_symmetric(const OperatorMatrix &matrix) {
  return eigen_symmetric(matrix.entries);
}

double SampledWave::norm_squared() const {
  double sum = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double w = (k == 0 || k + 1 == values.size()) ? 0.5 : 1.0;
    sum += w * values[k] * values[k];
  }
  return sum * axis.step;
}

SampledWave synthesize(const BasisSet &basis, const Eigen::VectorXd &coeffs,
                       const UniformAxis &axis) {
  if (coeffs.size() != basis.size()) {
    throw NumericalError(ErrorKind::ContractViolation,
                         "coefficient count " + std::to_string(coeffs.size()) +
                             " does not match basis size " +
                             std::to_string(basis.size()));
  }
  SampledWave wave{axis, std::vector<double>(axis.size())};
  for (std::size_t k = 0; k < wave.values.size(); ++k) {
    wave.values[k] = coeffs.dot(basis.values(axis.at(k)));
  }
  return wave;
}

PeakMetrics peak_metrics(const SampledWave &wave) {
  if (wave.axis.step > 0.05 + 1e-12) {
    throw NumericalError(ErrorKind::ContractViolation,
                         "peak metrics need grid resolution <= 0.05");
  }
  const auto &y = wave.values;
  const auto peak_it = std::max_element(y.begin(), y.end(), [](double a, double b) {
    return std::abs(a) < std::abs(b);
  });
  if (peak_it == y.end() || *peak_it == 0.0) {
    throw NumericalError(ErrorKind::DegenerateInput, "wave is identically zero");
  }
  const std::size_t peak = static_cast<std::size_t>(peak_it - y.begin());
  PeakMetrics out;
  out.max_abs = std::abs(*peak_it);
  out.peak_position = wave.axis.at(peak);

  for (std::size_t k = 0; k < y.size(); ++k) {
    if (std::abs(y[k]) > 0.01 * out.max_abs) {
      out.effective_range = std::max(out.effective_range, std::abs(wave.axis.at(k)));
    }
  }

  // Walk outward to the half-maximum crossings, interpolating linearly.
  const double half = 0.5 * out.max_abs;
  double left = wave.axis.at(0);
  for (std::size_t k = peak; k > 0; --k) {
    if (std::abs(y[k - 1]) < half) {
      const double a = std::abs(y[k - 1]), b = std::abs(y[k]);
      left = wave.axis.at(k - 1) + wave.axis.step * (half - a) / (b - a);
      break;
    }
  }
  double right = wave.axis.at(y.size() - 1);
  for (std::size_t k = peak; k + 1 < y.size(); ++k) {
    if (std::abs(y[k + 1]) < half) {
      const double a = std::abs(y[k]), b = std::abs(y[k + 1]);
      right = wave.axis.at(k) + wave.axis.step * (a - half) / (a - b);
      break;
    }
  }
  out.fwhm = right - left;
  return out;
}

}  // namespace matrep
