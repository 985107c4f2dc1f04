#include "matrep/basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "matrep/eigen.hpp"
#include "matrep/errors.hpp"
#include "matrep/hermite.hpp"

namespace matrep {

namespace {

constexpr double kMaxCondition = 1e12;

void fail(const std::string &message) {
  throw NumericalError(ErrorKind::InvalidSpec, message);
}

double unit_gaussian(double r, double center, double beta) {
  const double x = (r - center) / beta;
  return std::pow(std::numbers::pi, -0.25) / std::sqrt(beta) * std::exp(-0.5 * x * x);
}

std::vector<double> symmetric_centers(int n, double sigma) {
  std::vector<double> centers(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    centers[i - 1] = i * sigma - 0.5 * (n + 1) * sigma;
  }
  return centers;
}

Spectrum checked_spectrum(const Eigen::MatrixXd &gram) {
  Spectrum spectrum = eigen_symmetric(gram);
  const double cond = condition_number(spectrum.eigenvalues);
  if (!(cond <= kMaxCondition)) {
    throw NumericalError(ErrorKind::IllConditionedBasis,
                         "overlap condition number " + std::to_string(cond) +
                             " exceeds 1e12");
  }
  return spectrum;
}

}  // namespace

void BasisSpec::validate() const {
  if (n < 1) fail("basis size must be at least 1");
  if (!(beta > 0.0)) fail("beta must be positive");
  if (family != Family::HarmonicOscillator && !(sigma > 0.0)) {
    fail("sigma must be positive for Gaussian families");
  }
  if (family == Family::ShiftedGaussians && n % 2 != 0) {
    fail("shifted Gaussian families need an even number of functions");
  }
  if (family == Family::HarmonicOscillator) {
    if (parity == Parity::Odd && n < 2) fail("odd oscillator family needs n >= 2");
    const int top = parity == Parity::Both || (n - 1) % 2 == (parity == Parity::Odd) ? n - 1 : n - 2;
    if (top > kMaxHermiteDegree) {
      throw NumericalError(ErrorKind::UnsupportedDegree,
                           "oscillator basis needs degree " + std::to_string(top));
    }
  }
}

double gaussian_overlap(double a, double b, double beta) {
  const double d = a - b;
  return std::exp(-d * d / (4.0 * beta * beta));
}

Eigen::VectorXd RawFamily::values(double r) const {
  const Eigen::Index n = size();
  Eigen::VectorXd out(n);
  if (is_oscillator()) {
    const auto phi = hermite_functions(degrees.back(), r);
    for (Eigen::Index i = 0; i < n; ++i) out(i) = phi[degrees[i]];
    return out;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    double sum = 0.0;
    for (const auto &term : gaussians[i]) {
      sum += term.weight * unit_gaussian(r, term.center, spec.beta);
    }
    out(i) = sum;
  }
  return out;
}

Eigen::VectorXd RawFamily::moments() const {
  const Eigen::Index n = size();
  Eigen::VectorXd out(n);
  if (is_oscillator()) {
    for (Eigen::Index i = 0; i < n; ++i) out(i) = hermite_moment(degrees[i]);
    return out;
  }
  const double single = std::sqrt(2.0 * std::sqrt(std::numbers::pi) * spec.beta);
  for (Eigen::Index i = 0; i < n; ++i) {
    double sum = 0.0;
    for (const auto &term : gaussians[i]) sum += term.weight;
    out(i) = single * sum;
  }
  return out;
}

RawFamily build_raw_family(const BasisSpec &spec) {
  spec.validate();
  RawFamily raw;
  raw.spec = spec;
  const int n = spec.n;

  switch (spec.family) {
    case Family::HarmonicOscillator: {
      // Parity filters the first n oscillator functions.
      for (int d = 0; d < n; ++d) {
        if (spec.parity == Parity::Both || (d % 2 == 1) == (spec.parity == Parity::Odd)) {
          raw.degrees.push_back(d);
        }
      }
      const auto size = static_cast<Eigen::Index>(raw.degrees.size());
      raw.gram = Eigen::MatrixXd::Identity(size, size);
      return raw;
    }
    case Family::ShiftedGaussians:
    case Family::CenteredGaussians:
      for (double c : symmetric_centers(n, spec.sigma)) {
        raw.gaussians.push_back({{c, 1.0}});
      }
      break;
    case Family::SymmetricPairs:
      for (int i = 1; i <= n; ++i) {
        const double c = (i - 0.5) * spec.sigma;
        const double norm =
            std::sqrt(2.0 * (1.0 + gaussian_overlap(c, -c, spec.beta)));
        raw.gaussians.push_back({{c, 1.0 / norm}, {-c, 1.0 / norm}});
      }
      break;
  }

  raw.gram.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double sum = 0.0;
      for (const auto &a : raw.gaussians[i]) {
        for (const auto &b : raw.gaussians[j]) {
          sum += a.weight * b.weight * gaussian_overlap(a.center, b.center, spec.beta);
        }
      }
      raw.gram(i, j) = sum;
      raw.gram(j, i) = sum;
    }
  }
  return raw;
}

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd &gram, OrthoMethod method) {
  const Spectrum spectrum = checked_spectrum(gram);
  const Eigen::Index n = gram.rows();

  if (method == OrthoMethod::Lowdin) {
    const Eigen::VectorXd inv_sqrt = spectrum.eigenvalues.cwiseSqrt().cwiseInverse();
    return spectrum.vectors * inv_sqrt.asDiagonal() * spectrum.vectors.transpose();
  }

  // Rows of c are coefficient vectors; orthonormalize them in <u, v> = u^T S v.
  Eigen::MatrixXd c = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      const double projection = c.row(i).dot(gram * c.row(j).transpose());
      c.row(i) -= projection * c.row(j);
    }
    const double norm = std::sqrt(c.row(i).dot(gram * c.row(i).transpose()));
    c.row(i) /= norm;
  }
  return c;
}

DualBasis dual_basis(const Eigen::MatrixXd &gram) {
  const Spectrum spectrum = checked_spectrum(gram);
  const Eigen::VectorXd inverse = spectrum.eigenvalues.cwiseInverse();
  return {spectrum.vectors * inverse.asDiagonal() * spectrum.vectors.transpose()};
}

BasisSet::BasisSet(const BasisSpec &spec) : raw_(build_raw_family(spec)) {
  if (raw_.is_oscillator()) {
    coeff_ = Eigen::MatrixXd::Identity(size(), size());
    condition_ = 1.0;
    return;
  }
  condition_ = condition_number(eigen_symmetric(raw_.gram).eigenvalues);
  coeff_ = orthonormalize(raw_.gram, spec.ortho);
}

double BasisSet::evaluate(int i, double r) const {
  if (i < 1 || i > size()) {
    throw NumericalError(ErrorKind::IndexOutOfRange,
                         "basis index " + std::to_string(i) + " outside [1, " +
                             std::to_string(size()) + "]");
  }
  return coeff_.row(i - 1).dot(raw_.values(r));
}

Eigen::VectorXd BasisSet::values(double r) const {
  if (raw_.is_oscillator()) return raw_.values(r);
  return coeff_ * raw_.values(r);
}

Eigen::MatrixXd BasisSet::values(const std::vector<double> &points) const {
  Eigen::MatrixXd out(size(), static_cast<Eigen::Index>(points.size()));
  for (std::size_t k = 0; k < points.size(); ++k) {
    out.col(static_cast<Eigen::Index>(k)) = values(points[k]);
  }
  return out;
}

Eigen::VectorXd BasisSet::moments() const {
  if (raw_.is_oscillator()) return raw_.moments();
  return coeff_ * raw_.moments();
}

int BasisSet::parity_of(int i) const {
  if (i < 1 || i > size()) {
    throw NumericalError(ErrorKind::IndexOutOfRange, "basis index out of range");
  }
  if (raw_.is_oscillator()) return raw_.degrees[i - 1] % 2 == 0 ? 1 : -1;
  if (spec().family == Family::SymmetricPairs) return 1;
  return 0;
}

double BasisSet::support_half_width() const {
  if (raw_.is_oscillator()) {
    return std::sqrt(2.0 * raw_.degrees.back() + 1.0) + 12.0;
  }
  double reach = 0.0;
  for (const auto &terms : raw_.gaussians) {
    for (const auto &term : terms) reach = std::max(reach, std::abs(term.center));
  }
  return reach + 12.0 * spec().beta;
}

}  // namespace matrep
