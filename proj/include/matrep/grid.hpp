#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "matrep/errors.hpp"

namespace matrep {

/// Uniform sample axis min, min + step, ..., max (max included when it lies on
/// the lattice to within 1e-9 step).
struct UniformAxis {
  double min = 0.0;
  double max = 0.0;
  double step = 1.0;

  UniformAxis() = default;
  UniformAxis(double lo, double hi, double h) : min(lo), max(hi), step(h) {
    if (!(h > 0.0) || !(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
      throw NumericalError(ErrorKind::ContractViolation, "invalid axis");
    }
  }

  /// Symmetric axis [-half_width, half_width].
  static UniformAxis symmetric(double half_width, double h) {
    return UniformAxis(-half_width, half_width, h);
  }

  std::size_t size() const {
    return static_cast<std::size_t>(std::floor((max - min) / step + 1e-9)) + 1;
  }
  double at(std::size_t i) const { return min + step * static_cast<double>(i); }

  std::vector<double> points() const {
    std::vector<double> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = at(i);
    return out;
  }

  /// Index of the sample closest to x; OutOfRange when x lies outside
  /// [min - step/2, max + step/2].
  std::size_t nearest(double x) const {
    const double pos = (x - min) / step;
    if (pos < -0.5 || pos > static_cast<double>(size() - 1) + 0.5) {
      throw NumericalError(ErrorKind::OutOfRange, "position outside the grid");
    }
    const auto idx = static_cast<long>(std::lround(pos));
    return static_cast<std::size_t>(std::clamp(idx, 0L, static_cast<long>(size() - 1)));
  }
};

}  // namespace matrep
