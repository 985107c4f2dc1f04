#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "matrep/basis.hpp"
#include "matrep/quadrature.hpp"

namespace matrep {

enum class OperatorKind { Kinetic, PositionSquared, LocalPotential, Hamiltonian, Custom };

/// Symmetric matrix <i|O|j> in the orthonormal family described by `basis`.
struct OperatorMatrix {
  BasisSpec basis;
  Eigen::MatrixXd entries;
  OperatorKind kind = OperatorKind::Custom;

  Eigen::Index size() const { return entries.rows(); }
};

/// One term c exp(-a r^2) of a local potential.
struct PotentialTerm {
  double coefficient;
  double exponent;
};

/// v(r) = sum_k c_k exp(-a_k r^2).
struct PotentialSpec {
  std::vector<PotentialTerm> terms;

  /// At least one term and every exponent positive.
  void validate() const;
  double operator()(double r) const;
};

OperatorMatrix kinetic_matrix(const BasisSet &basis);
OperatorMatrix position_squared_matrix(const BasisSet &basis);

/// <i|v|j> by quadrature, starting from `rule` and doubling its resolution
/// until two successive results agree to 1e-8 (QuadratureFailure otherwise).
/// For Gaussian families the result is also compared with the closed form.
OperatorMatrix local_potential_matrix(const BasisSet &basis, const PotentialSpec &v,
                                      const QuadratureRule &rule);
OperatorMatrix local_potential_matrix(const BasisSet &basis, const PotentialSpec &v);

/// Exact Gaussian-product integrals; Gaussian families only.
Eigen::MatrixXd gaussian_potential_closed_form(const BasisSet &basis,
                                               const PotentialSpec &v);

/// g_i = <chi_i|xi> with the same convergence rule as local_potential_matrix.
Eigen::VectorXd separable_projection(const BasisSet &basis,
                                     const std::function<double(double)> &xi,
                                     const QuadratureRule &rule);

/// Rank-one matrix g g^T.
OperatorMatrix separable_matrix(const BasisSet &basis, const Eigen::VectorXd &g);

/// Kinetic plus local potential. An empty term list means v = 0.
OperatorMatrix hamiltonian_matrix(const BasisSet &basis, const PotentialSpec &v);

}  // namespace matrep
