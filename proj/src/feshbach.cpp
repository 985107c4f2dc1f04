#include "matrep/feshbach.hpp"

#include <cmath>
#include <string>

#include "matrep/eigen.hpp"
#include "matrep/errors.hpp"

namespace matrep {

Eigen::MatrixXd FeshbachPartition::retained() const {
  const Eigen::Index q = n2 - n1;
  Eigen::MatrixXd out(n2, n2);
  out.topLeftCorner(n1, n1) = php;
  out.topRightCorner(n1, q) = phq;
  out.bottomLeftCorner(q, n1) = phq.transpose();
  out.bottomRightCorner(q, q) = qhq;
  return out;
}

FeshbachPartition partition(const OperatorMatrix &h, Eigen::Index n1, Eigen::Index n2) {
  if (n1 < 1 || n1 >= n2 || n2 > h.size()) {
    throw NumericalError(ErrorKind::ContractViolation,
                         "partition needs 1 <= n1 < n2 <= N, got n1 = " +
                             std::to_string(n1) + ", n2 = " + std::to_string(n2) +
                             ", N = " + std::to_string(h.size()));
  }
  FeshbachPartition part;
  part.basis = h.basis;
  part.n1 = n1;
  part.n2 = n2;
  part.remainder = h.size() - n2;
  const Eigen::Index q = n2 - n1;
  part.php = h.entries.topLeftCorner(n1, n1);
  part.phq = h.entries.block(0, n1, n1, q);
  part.qhq = h.entries.block(n1, n1, q, q);
  const Spectrum qs = eigen_symmetric(part.qhq);
  part.q_energies = qs.eigenvalues;
  part.q_vectors = qs.vectors;
  return part;
}

Eigen::MatrixXd effective_kernel(const FeshbachPartition &part, double e) {
  Eigen::VectorXd inverse(part.q_energies.size());
  for (Eigen::Index k = 0; k < inverse.size(); ++k) {
    const double gap = e - part.q_energies(k);
    if (std::abs(gap) <= 1e-10) {
      throw NumericalError(ErrorKind::ResolventPole,
                           "energy " + std::to_string(e) +
                               " hits a QhQ eigenvalue");
    }
    inverse(k) = 1.0 / gap;
  }
  const Eigen::MatrixXd coupling = part.phq * part.q_vectors;
  Eigen::MatrixXd w = coupling * inverse.asDiagonal() * coupling.transpose();
  return 0.5 * (w + w.transpose());
}

EffectiveSolve solve_selfconsistent(const FeshbachPartition &part, double tol, int max_iter) {
  if (!(tol > 0.0)) {
    throw NumericalError(ErrorKind::ContractViolation, "tolerance must be positive");
  }
  EffectiveSolve out;
  double energy = eigen_symmetric(part.php).ground();
  out.history.push_back(energy);
  for (int iter = 1; iter <= max_iter; ++iter) {
    const Spectrum s = eigen_symmetric(part.php + effective_kernel(part, energy));
    const double next = s.ground();
    out.history.push_back(next);
    out.iterations = iter;
    const double change = std::abs(next - energy);
    energy = next;
    if (change < tol) {
      out.energy = energy;
      out.p_state = s.vectors.col(0);
      return out;
    }
  }
  throw NumericalError(ErrorKind::NonConvergence,
                       "self-consistent energy not settled after " +
                           std::to_string(max_iter) + " iterations");
}

KernelGrid render_effective(const BasisSet &basis, const FeshbachPartition &part, double e,
                            const UniformAxis &r_axis, const UniformAxis &s_axis) {
  return render_block_kernel(basis, effective_kernel(part, e), KernelKind::Effective, r_axis,
                             s_axis);
}

}  // namespace matrep
