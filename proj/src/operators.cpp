#include "matrep/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "matrep/errors.hpp"

namespace matrep {

namespace {

constexpr double kConvergence = 1e-8;
constexpr int kMaxRefinements = 5;

// Oscillator matrix elements of -d^2/dr^2 (sign = -1) or r^2 (sign = +1).
double oscillator_element(int n, int m, double sign) {
  if (n == m) return n + 0.5;
  if (std::abs(n - m) == 2) {
    const double k = std::min(n, m);
    return sign * 0.5 * std::sqrt((k + 1.0) * (k + 2.0));
  }
  return 0.0;
}

template <typename Element>
Eigen::MatrixXd oscillator_matrix(const RawFamily &raw, Element element) {
  const Eigen::Index n = raw.size();
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = element(raw.degrees[i], raw.degrees[j]);
  }
  return out;
}

// Congruence transform of a raw Gaussian-pair element into the chi family.
template <typename Element>
Eigen::MatrixXd gaussian_matrix(const BasisSet &basis, Element element) {
  const RawFamily &raw = basis.raw();
  const Eigen::Index n = raw.size();
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      double sum = 0.0;
      for (const auto &a : raw.gaussians[i]) {
        for (const auto &b : raw.gaussians[j]) {
          sum += a.weight * b.weight * element(a.center, b.center);
        }
      }
      m(i, j) = sum;
      m(j, i) = sum;
    }
  }
  Eigen::MatrixXd out = basis.coeff() * m * basis.coeff().transpose();
  return 0.5 * (out + out.transpose());
}

Eigen::MatrixXd weighted_products(const BasisSet &basis, const QuadratureRule &rule,
                                  const std::function<double(double)> &v) {
  const Eigen::MatrixXd phi = basis.values(rule.nodes);
  Eigen::VectorXd w(static_cast<Eigen::Index>(rule.size()));
  for (std::size_t k = 0; k < rule.size(); ++k) {
    w(static_cast<Eigen::Index>(k)) = rule.plain_weights[k] * v(rule.nodes[k]);
  }
  Eigen::MatrixXd out = phi * w.asDiagonal() * phi.transpose();
  return 0.5 * (out + out.transpose());
}

// Gauss-Hermite rule stretched to integrate exp(-a r^2) f(r) for f a Hermite
// function product: substituting x = sqrt(1 + a) r leaves exp(-x^2) times a
// polynomial, so the rescaled rule is exact once its order exceeds the degree.
QuadratureRule absorb_gaussian(const QuadratureRule &gh, double a) {
  QuadratureRule out = gh;
  const double scale = std::sqrt(1.0 + a);
  for (std::size_t k = 0; k < gh.size(); ++k) {
    const double x = gh.nodes[k];
    out.nodes[k] = x / scale;
    out.plain_weights[k] = gh.plain_weights[k] * std::exp(-a * x * x / (1.0 + a)) / scale;
  }
  return out;
}

template <typename Compute>
auto converge(const QuadratureRule &start, Compute compute) {
  QuadratureRule rule = start;
  auto previous = compute(rule);
  for (int attempt = 0; attempt < kMaxRefinements; ++attempt) {
    QuadratureRule finer = rule.refined();
    if (finer.size() == rule.size()) break;
    auto current = compute(finer);
    const double change = (current - previous).cwiseAbs().maxCoeff();
    if (change < kConvergence) return current;
    rule = std::move(finer);
    previous = std::move(current);
  }
  throw NumericalError(ErrorKind::QuadratureFailure,
                       "quadrature did not settle to 1e-8 under refinement");
}

}  // namespace

void PotentialSpec::validate() const {
  if (terms.empty()) {
    throw NumericalError(ErrorKind::InvalidSpec, "potential needs at least one term");
  }
  for (const auto &term : terms) {
    if (!(term.exponent > 0.0) || !std::isfinite(term.coefficient)) {
      throw NumericalError(ErrorKind::InvalidSpec,
                           "potential exponents must be positive and coefficients finite");
    }
  }
}

double PotentialSpec::operator()(double r) const {
  double sum = 0.0;
  for (const auto &term : terms) sum += term.coefficient * std::exp(-term.exponent * r * r);
  return sum;
}

OperatorMatrix kinetic_matrix(const BasisSet &basis) {
  OperatorMatrix out{basis.spec(), {}, OperatorKind::Kinetic};
  if (basis.raw().is_oscillator()) {
    out.entries = oscillator_matrix(basis.raw(), [](int n, int m) {
      return oscillator_element(n, m, -1.0);
    });
    return out;
  }
  const double beta2 = basis.spec().beta * basis.spec().beta;
  out.entries = gaussian_matrix(basis, [beta2](double a, double b) {
    const double d2 = (a - b) * (a - b);
    return (0.5 / beta2) * (1.0 - d2 / (2.0 * beta2)) * std::exp(-d2 / (4.0 * beta2));
  });
  return out;
}

OperatorMatrix position_squared_matrix(const BasisSet &basis) {
  OperatorMatrix out{basis.spec(), {}, OperatorKind::PositionSquared};
  if (basis.raw().is_oscillator()) {
    out.entries = oscillator_matrix(basis.raw(), [](int n, int m) {
      return oscillator_element(n, m, 1.0);
    });
    return out;
  }
  const double beta2 = basis.spec().beta * basis.spec().beta;
  out.entries = gaussian_matrix(basis, [beta2](double a, double b) {
    const double d2 = (a - b) * (a - b);
    const double mid = 0.5 * (a + b);
    return (0.5 * beta2 + mid * mid) * std::exp(-d2 / (4.0 * beta2));
  });
  return out;
}

Eigen::MatrixXd gaussian_potential_closed_form(const BasisSet &basis,
                                               const PotentialSpec &v) {
  if (basis.raw().is_oscillator()) {
    throw NumericalError(ErrorKind::ContractViolation,
                         "closed-form potential integrals need a Gaussian family");
  }
  const double beta2 = basis.spec().beta * basis.spec().beta;
  return gaussian_matrix(basis, [&](double a, double b) {
    const double d2 = (a - b) * (a - b);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (const auto &term : v.terms) {
      const double stretch = 1.0 + term.exponent * beta2;
      sum += term.coefficient * std::exp(-term.exponent * mid * mid / stretch) /
             std::sqrt(stretch);
    }
    return sum * std::exp(-d2 / (4.0 * beta2));
  });
}

OperatorMatrix local_potential_matrix(const BasisSet &basis, const PotentialSpec &v,
                                      const QuadratureRule &rule) {
  v.validate();
  OperatorMatrix out{basis.spec(), {}, OperatorKind::LocalPotential};
  out.entries = converge(rule, [&](const QuadratureRule &r) {
    return weighted_products(basis, r, std::cref(v));
  });
  if (!basis.raw().is_oscillator()) {
    const Eigen::MatrixXd exact = gaussian_potential_closed_form(basis, v);
    const double mismatch = (exact - out.entries).cwiseAbs().maxCoeff();
    if (mismatch > kConvergence) {
      throw NumericalError(ErrorKind::QuadratureFailure,
                           "quadrature disagrees with closed form by " +
                               std::to_string(mismatch));
    }
  }
  return out;
}

OperatorMatrix local_potential_matrix(const BasisSet &basis, const PotentialSpec &v) {
  if (!basis.raw().is_oscillator()) return local_potential_matrix(basis, v, default_rule(basis));
  v.validate();
  const QuadratureRule start = default_rule(basis);
  OperatorMatrix out{basis.spec(), Eigen::MatrixXd::Zero(basis.size(), basis.size()),
                     OperatorKind::LocalPotential};
  for (const auto &term : v.terms) {
    out.entries += term.coefficient * converge(start, [&](const QuadratureRule &r) {
      return weighted_products(basis, absorb_gaussian(r, term.exponent),
                               [](double) { return 1.0; });
    });
  }
  return out;
}

Eigen::VectorXd separable_projection(const BasisSet &basis,
                                     const std::function<double(double)> &xi,
                                     const QuadratureRule &rule) {
  return converge(rule, [&](const QuadratureRule &r) -> Eigen::VectorXd {
    const Eigen::MatrixXd phi = basis.values(r.nodes);
    Eigen::VectorXd w(static_cast<Eigen::Index>(r.size()));
    for (std::size_t k = 0; k < r.size(); ++k) {
      w(static_cast<Eigen::Index>(k)) = r.plain_weights[k] * xi(r.nodes[k]);
    }
    return phi * w;
  });
}

OperatorMatrix separable_matrix(const BasisSet &basis, const Eigen::VectorXd &g) {
  if (g.size() != basis.size()) {
    throw NumericalError(ErrorKind::ContractViolation, "form-factor length mismatch");
  }
  return {basis.spec(), g * g.transpose(), OperatorKind::Custom};
}

OperatorMatrix hamiltonian_matrix(const BasisSet &basis, const PotentialSpec &v) {
  OperatorMatrix out = kinetic_matrix(basis);
  out.kind = OperatorKind::Hamiltonian;
  if (!v.terms.empty()) out.entries += local_potential_matrix(basis, v).entries;
  return out;
}

}  // namespace matrep
