#pragma once

#include <Eigen/Dense>
#include <vector>

#include "matrep/basis.hpp"
#include "matrep/grid.hpp"
#include "matrep/kernels.hpp"
#include "matrep/operators.hpp"

namespace matrep {

/// P/Q blocks of a Hamiltonian matrix. P spans basis functions 1..n1, Q spans
/// n1+1..n2; everything above n2 (the remainder) is only counted.
struct FeshbachPartition {
  BasisSpec basis;
  Eigen::Index n1 = 0;
  Eigen::Index n2 = 0;
  Eigen::Index remainder = 0;
  Eigen::MatrixXd php;
  Eigen::MatrixXd phq;
  Eigen::MatrixXd qhq;
  /// Eigen-decomposition of QhQ, used for every resolvent application.
  Eigen::VectorXd q_energies;
  Eigen::MatrixXd q_vectors;

  /// The retained (P + Q) block, n2 x n2.
  Eigen::MatrixXd retained() const;
};

FeshbachPartition partition(const OperatorMatrix &h, Eigen::Index n1, Eigen::Index n2);

/// W_eff(e) = PhQ (e - QhQ)^{-1} QhP, applied eigenwise. ResolventPole when
/// e lies within 1e-10 of an eigenvalue of QhQ.
Eigen::MatrixXd effective_kernel(const FeshbachPartition &part, double e);

struct EffectiveSolve {
  double energy = 0.0;
  int iterations = 0;
  std::vector<double> history;
  /// Ground vector of PhP + W_eff(energy), unit norm.
  Eigen::VectorXd p_state;
};

/// Fixed-point iteration E <- ground(PhP + W_eff(E)) seeded with ground(PhP).
EffectiveSolve solve_selfconsistent(const FeshbachPartition &part, double tol = 1e-10,
                                    int max_iter = 200);

/// Kernel sum_{ij in P} chi_i(r) W_eff(e)_ij chi_j(s).
KernelGrid render_effective(const BasisSet &basis, const FeshbachPartition &part, double e,
                            const UniformAxis &r_axis, const UniformAxis &s_axis);

}  // namespace matrep
