#include "matrep/kernels.hpp"

#include <cmath>
#include <string>

#include "matrep/errors.hpp"
#include "matrep/hermite.hpp"

namespace matrep {

namespace {

constexpr double kConfluent = 1e-6;
// Below this separation the second-derivative form switches to the Taylor
// series; the closed form loses ~eps/|r-s|^3 there.
constexpr double kSecondDerivativeSwitch = 0.05;
constexpr int kTaylorOrder = 48;

void check_size(int n) {
  if (n < 1) {
    throw NumericalError(ErrorKind::ContractViolation, "kernel size N must be >= 1");
  }
}

// Top two oscillator functions and their first derivatives.
struct Pair {
  double upper;   // degree N
  double lower;   // degree N-1
  double d_upper;
  double d_lower;
};

Pair top_pair(int n, double x) {
  std::vector<double> phi(static_cast<std::size_t>(n) + 2);
  hermite_functions(x, std::span<double>(phi.data(), phi.size() - 1));
  // One degree past N for the derivative of phi_N.
  const double nn = n;
  phi[n + 1] = std::sqrt(2.0 / (nn + 1.0)) * x * phi[n] - std::sqrt(nn / (nn + 1.0)) * phi[n - 1];
  const double m = n - 1;
  Pair p;
  p.upper = phi[n];
  p.lower = phi[n - 1];
  p.d_upper = std::sqrt(nn / 2.0) * phi[n - 1] - std::sqrt((nn + 1.0) / 2.0) * phi[n + 1];
  p.d_lower = (n >= 2 ? std::sqrt(m / 2.0) * phi[n - 2] : 0.0) - std::sqrt(nn / 2.0) * phi[n];
  return p;
}

// Taylor coefficients c_k (k >= 1) of f(s + d) = A(s) B(s + d) - A(s + d) B(s),
// where A, B are the degree N and N-1 functions.
std::vector<double> numerator_series(int n, double s, int order) {
  const auto a = hermite_taylor(n, s, order);
  const auto b = hermite_taylor(n - 1, s, order);
  std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
  for (int k = 1; k <= order; ++k) c[k] = a[0] * b[k] - a[k] * b[0];
  return c;
}

Eigen::MatrixXd leading_values(const BasisSet &basis, Eigen::Index k,
                               const std::vector<double> &points) {
  return basis.values(points).topRows(k);
}

}  // namespace

UniformAxis default_kernel_axis(Eigen::Index n) {
  // Rounded up to the lattice so the axis is mirror symmetric and contains 0.
  const double half = std::ceil((1.5 * std::sqrt(static_cast<double>(n)) + 2.0) * 4.0) / 4.0;
  return UniformAxis::symmetric(half, 0.25);
}

KernelKind kernel_kind_for(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::Kinetic: return KernelKind::Kinetic;
    case OperatorKind::PositionSquared: return KernelKind::PositionSquared;
    case OperatorKind::LocalPotential: return KernelKind::Potential;
    case OperatorKind::Hamiltonian: return KernelKind::Hamiltonian;
    case OperatorKind::Custom: return KernelKind::Separable;
  }
  return KernelKind::Separable;
}

KernelGrid render_block_kernel(const BasisSet &basis, const Eigen::MatrixXd &block,
                               KernelKind kind, const UniformAxis &r_axis,
                               const UniformAxis &s_axis) {
  const Eigen::Index k = block.rows();
  if (block.cols() != k || k > basis.size() || k < 1) {
    throw NumericalError(ErrorKind::ContractViolation, "block does not fit the basis");
  }
  const Eigen::MatrixXd left = leading_values(basis, k, r_axis.points());
  const Eigen::MatrixXd right = leading_values(basis, k, s_axis.points());
  return {r_axis, s_axis, left.transpose() * block * right, kind};
}

KernelGrid render_identity_kernel(const BasisSet &basis, const UniformAxis &r_axis,
                                  const UniformAxis &s_axis) {
  const Eigen::MatrixXd left = basis.values(r_axis.points());
  const Eigen::MatrixXd right = basis.values(s_axis.points());
  const KernelKind kind = basis.raw().is_oscillator() ? KernelKind::Identity
                                                      : KernelKind::GeneralBasisIdentity;
  return {r_axis, s_axis, left.transpose() * right, kind};
}

KernelGrid render_kernel(const BasisSet &basis, const OperatorMatrix &matrix,
                         const UniformAxis &r_axis, const UniformAxis &s_axis) {
  if (matrix.size() != basis.size()) {
    throw NumericalError(ErrorKind::ContractViolation, "matrix does not match basis size");
  }
  return render_block_kernel(basis, matrix.entries, kernel_kind_for(matrix.kind), r_axis,
                             s_axis);
}

double identity_kernel(const BasisSet &basis, double r, double s) {
  return basis.values(r).dot(basis.values(s));
}

double dual_identity_kernel(const BasisSet &basis, const DualBasis &dual, double r,
                            double s) {
  return basis.raw().values(r).dot(dual.coeff * basis.raw().values(s));
}

double operator_kernel(const BasisSet &basis, const OperatorMatrix &matrix, double r,
                       double s) {
  return basis.values(r).dot(matrix.entries * basis.values(s));
}

double christoffel_darboux(int n, double r, double s) {
  check_size(n);
  const double alpha = std::sqrt(0.5 * n);
  const double delta = r - s;
  if (std::abs(delta) < kConfluent) {
    const auto c = numerator_series(n, s, 6);
    double sum = 0.0;
    for (int k = 6; k >= 1; --k) sum = sum * delta + c[k];
    return -alpha * sum;
  }
  const auto phi_r = hermite_functions(n, r);
  const auto phi_s = hermite_functions(n, s);
  return alpha * (phi_s[n] * phi_r[n - 1] - phi_r[n] * phi_s[n - 1]) / (s - r);
}

double r2_corrective_terms(int n, double r, double s) {
  check_size(n);
  const auto phi_r = hermite_functions(n + 1, r);
  const auto phi_s = hermite_functions(n, s);
  const double nn = n;
  double out = phi_r[n + 1] * 0.5 * std::sqrt(nn * (nn + 1.0)) * phi_s[n - 1];
  if (n >= 2) out += phi_r[n] * 0.5 * std::sqrt((nn - 1.0) * nn) * phi_s[n - 2];
  return out;
}

double r2_kernel_compact_one_sided(int n, double r, double s) {
  return r * r * christoffel_darboux(n, r, s) - r2_corrective_terms(n, r, s);
}

double r2_kernel_compact(int n, double r, double s) {
  return 0.5 * (r2_kernel_compact_one_sided(n, r, s) + r2_kernel_compact_one_sided(n, s, r));
}

double projected_oscillator_compact(int n, double r, double s) {
  check_size(n);
  const double alpha = std::sqrt(0.5 * n);
  const double delta = r - s;
  double second;
  if (std::abs(delta) < kSecondDerivativeSwitch) {
    const auto c = numerator_series(n, s, kTaylorOrder);
    double sum = 0.0;
    for (int k = kTaylorOrder; k >= 3; --k) sum = sum * delta + c[k] * (k - 1.0) * (k - 2.0);
    second = -alpha * sum;
  } else {
    const Pair at_r = top_pair(n, r);
    const Pair at_s = top_pair(n, s);
    const double energy_upper = 2.0 * n + 1.0;
    const double energy_lower = 2.0 * n - 1.0;
    const double f = at_s.upper * at_r.lower - at_r.upper * at_s.lower;
    const double df = at_s.upper * at_r.d_lower - at_r.d_upper * at_s.lower;
    const double d2f = at_s.upper * (r * r - energy_lower) * at_r.lower -
                       (r * r - energy_upper) * at_r.upper * at_s.lower;
    const double g = s - r;
    second = alpha * (d2f / g + 2.0 * df / (g * g) + 2.0 * f / (g * g * g));
  }
  return r * r * christoffel_darboux(n, r, s) - second;
}

double cut_weight(const BasisSet &basis, double s) {
  return basis.moments().dot(basis.values(s));
}

double cut_weight(const BasisSet &basis, const OperatorMatrix &matrix, double s) {
  if (matrix.size() != basis.size()) {
    throw NumericalError(ErrorKind::ContractViolation, "matrix does not match basis size");
  }
  return basis.moments().dot(matrix.entries * basis.values(s));
}

CurveSeries weight_curve(const BasisSet &basis, const UniformAxis &axis) {
  CurveSeries out{axis.points(), {}, CurveLabel::CutWeight, 0.0};
  const Eigen::VectorXd m = basis.moments();
  for (double s : out.x) out.y.push_back(m.dot(basis.values(s)));
  return out;
}

CurveSeries weight_curve(const BasisSet &basis, const OperatorMatrix &matrix,
                         const UniformAxis &axis) {
  CurveSeries out{axis.points(), {}, CurveLabel::CutWeight, 0.0};
  if (matrix.kind == OperatorKind::Kinetic) out.label = CurveLabel::KineticWeight;
  const Eigen::RowVectorXd left = basis.moments().transpose() * matrix.entries;
  for (double s : out.x) out.y.push_back(left.dot(basis.values(s)));
  return out;
}

CrestAndCuts crest_and_cuts(const KernelGrid &kernel, const std::vector<double> &s_values) {
  CrestAndCuts out;
  out.crest.label = CurveLabel::Crest;
  const std::size_t n = std::min(kernel.r_axis.size(), kernel.s_axis.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double r = kernel.r_axis.at(i);
    const std::size_t j = kernel.s_axis.nearest(r);
    if (std::abs(kernel.s_axis.at(j) - r) > 1e-9 * std::max(1.0, std::abs(r))) continue;
    out.crest.x.push_back(r);
    out.crest.y.push_back(kernel.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
  }
  for (double s : s_values) {
    const std::size_t j = kernel.s_axis.nearest(s);
    CurveSeries cut{kernel.r_axis.points(), {}, CurveLabel::Cut, kernel.s_axis.at(j)};
    for (std::size_t i = 0; i < kernel.r_axis.size(); ++i) {
      cut.y.push_back(kernel.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    }
    out.cuts.push_back(std::move(cut));
  }
  return out;
}

double crest_ratio(const BasisSet &basis, const OperatorMatrix &matrix, double r) {
  const Eigen::VectorXd chi = basis.values(r);
  const double denominator = chi.squaredNorm();
  if (denominator < 1e-12) {
    throw NumericalError(ErrorKind::OutsideTrustRegion,
                         "crest D(r,r) below 1e-12 at r = " + std::to_string(r));
  }
  return chi.dot(matrix.entries * chi) / denominator;
}

CurveSeries crest_ratio_curve(const BasisSet &basis, const OperatorMatrix &matrix,
                              const UniformAxis &axis) {
  CurveSeries out{axis.points(), {}, CurveLabel::CrestRatio, 0.0};
  for (double r : out.x) out.y.push_back(crest_ratio(basis, matrix, r));
  return out;
}

}  // namespace matrep
