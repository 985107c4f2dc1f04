#include "matrep/oracle.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "matrep/eigen.hpp"
#include "matrep/errors.hpp"

namespace matrep {

namespace {

struct FdLevel {
  double energy;
  std::vector<double> diag;
  std::vector<double> off;
  std::vector<double> points;
};

FdLevel fd_level(const OraclePotential &v, double half_width, int interior) {
  const double h = 2.0 * half_width / (interior + 1.0);
  FdLevel level;
  level.diag.resize(static_cast<std::size_t>(interior));
  level.off.assign(static_cast<std::size_t>(interior - 1), -1.0 / (h * h));
  level.points.resize(static_cast<std::size_t>(interior));
  for (int k = 0; k < interior; ++k) {
    const double r = -half_width + h * (k + 1.0);
    level.points[k] = r;
    level.diag[k] = 2.0 / (h * h) + v(r);
  }
  level.energy = tridiagonal_lowest(level.diag, level.off);
  return level;
}

}  // namespace

OracleSolution fd_ground_state(const OraclePotential &v, double half_width, int npoints,
                               double tolerance) {
  if (npoints < 500 || half_width < 10.0) {
    throw NumericalError(ErrorKind::ContractViolation,
                         "oracle needs npoints >= 500 and half-width >= 10");
  }
  if (!v.gaussians.terms.empty()) v.gaussians.validate();

  const FdLevel coarse = fd_level(v, half_width, npoints);
  const FdLevel fine = fd_level(v, half_width, 2 * npoints + 1);

  OracleSolution out;
  out.coarse_eigenvalue = coarse.energy;
  out.fine_eigenvalue = fine.energy;
  out.eigenvalue = (4.0 * fine.energy - coarse.energy) / 3.0;
  out.richardson_error = std::abs(coarse.energy - fine.energy);
  out.half_width = half_width;
  out.npoints = npoints;
  if (out.richardson_error > tolerance) {
    throw NumericalError(ErrorKind::ResolutionInsufficient,
                         "Richardson error " + std::to_string(out.richardson_error) +
                             " exceeds tolerance " + std::to_string(tolerance));
  }

  const double h = fine.points[1] - fine.points[0];
  const std::vector<double> vec = tridiagonal_lowest_vector(fine.diag, fine.off, fine.energy);
  out.wave.axis = UniformAxis(fine.points.front(), fine.points.back(), h);
  out.wave.values = vec;
  const double scale = 1.0 / std::sqrt(out.wave.norm_squared());
  for (double &value : out.wave.values) value *= scale;
  return out;
}

double integrate(const std::function<double(double)> &f, double half_width, double tol) {
  const double a = -half_width;
  const double b = half_width;
  std::size_t intervals = 16;
  double h = (b - a) / static_cast<double>(intervals);
  double sum = 0.5 * (f(a) + f(b));
  for (std::size_t k = 1; k < intervals; ++k) sum += f(a + h * static_cast<double>(k));
  double estimate = sum * h;
  for (int halving = 1; halving <= 24; ++halving) {
    // New midpoints only.
    for (std::size_t k = 0; k < intervals; ++k) sum += f(a + h * (static_cast<double>(k) + 0.5));
    intervals *= 2;
    h *= 0.5;
    const double next = sum * h;
    if (halving >= 3 && std::abs(next - estimate) < tol) return next;
    estimate = next;
  }
  throw NumericalError(ErrorKind::NonConvergence,
                       "adaptive trapezoid did not reach tolerance after 24 halvings");
}

}  // namespace matrep
