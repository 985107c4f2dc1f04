#pragma once

#include <Eigen/Dense>
#include <vector>

#include "matrep/basis.hpp"
#include "matrep/grid.hpp"
#include "matrep/operators.hpp"

namespace matrep {

enum class KernelKind {
  Identity,              // D_N, oscillator basis
  Kinetic,
  PositionSquared,
  Potential,
  Separable,
  GeneralBasisIdentity,  // Delta_N, any non-oscillator basis
  Effective,
  Hamiltonian,
};

/// Samples K(r, s); values(i, j) = K(r_axis.at(i), s_axis.at(j)).
struct KernelGrid {
  UniformAxis r_axis;
  UniformAxis s_axis;
  Eigen::MatrixXd values;
  KernelKind kind = KernelKind::Identity;
};

/// [-(1.5 sqrt(N) + 2), 1.5 sqrt(N) + 2] at 4 points per unit length.
UniformAxis default_kernel_axis(Eigen::Index n);

KernelKind kernel_kind_for(OperatorKind kind);

/// sum_i chi_i(r) chi_i(s).
KernelGrid render_identity_kernel(const BasisSet &basis, const UniformAxis &r_axis,
                                  const UniformAxis &s_axis);
/// sum_ij chi_i(r) M_ij chi_j(s).
KernelGrid render_kernel(const BasisSet &basis, const OperatorMatrix &matrix,
                         const UniformAxis &r_axis, const UniformAxis &s_axis);
/// Kernel of a leading k x k block, using chi_1 .. chi_k.
KernelGrid render_block_kernel(const BasisSet &basis, const Eigen::MatrixXd &block,
                               KernelKind kind, const UniformAxis &r_axis,
                               const UniformAxis &s_axis);

/// Pointwise identity kernel sum_i chi_i(r) chi_i(s).
double identity_kernel(const BasisSet &basis, double r, double s);
/// Same kernel through the raw family and its dual: sum_i phi_i(r) tau_i(s).
double dual_identity_kernel(const BasisSet &basis, const DualBasis &dual, double r,
                            double s);
/// Pointwise operator kernel chi(r)^T M chi(s).
double operator_kernel(const BasisSet &basis, const OperatorMatrix &matrix, double r,
                       double s);

// Oscillator compact forms. N counts basis functions; the top function has
// Hermite degree N-1.

/// Two-term Christoffel-Darboux form of D_N; when |r - s| < 1e-6 the removable
/// singularity is resolved with a Taylor expansion about s.
double christoffel_darboux(int n, double r, double s);

/// The two functions left over when r^2 acts on D_N:
/// phi_N(r) sqrt((N-1)N)/2 phi_{N-2}(s) + phi_{N+1}(r) sqrt(N(N+1))/2 phi_{N-1}(s)
/// (Hermite degrees).
double r2_corrective_terms(int n, double r, double s);

/// r^2 D_N(r, s) minus the corrective terms, evaluated as written (not
/// manifestly symmetric).
double r2_kernel_compact_one_sided(int n, double r, double s);

/// Average of the one-sided form and its r <-> s transpose.
double r2_kernel_compact(int n, double r, double s);

/// D_N h D_N for h = r^2 - d^2/dr^2, as r^2 D_N - d^2 D_N / dr^2 with the
/// derivative taken analytically.
double projected_oscillator_compact(int n, double r, double s);

enum class CurveLabel { Crest, Cut, CutWeight, KineticWeight, CrestRatio };

struct CurveSeries {
  std::vector<double> x;
  std::vector<double> y;
  CurveLabel label = CurveLabel::Crest;
  /// Cut position for CurveLabel::Cut.
  double position = 0.0;
};

/// w(s) = integral over r of the identity kernel, from analytic moments.
double cut_weight(const BasisSet &basis, double s);
/// Integral over r of the operator kernel.
double cut_weight(const BasisSet &basis, const OperatorMatrix &matrix, double s);

CurveSeries weight_curve(const BasisSet &basis, const UniformAxis &axis);
CurveSeries weight_curve(const BasisSet &basis, const OperatorMatrix &matrix,
                         const UniformAxis &axis);

struct CrestAndCuts {
  CurveSeries crest;
  std::vector<CurveSeries> cuts;
};

/// Diagonal samples of a square kernel grid plus cuts K(., s) at the grid
/// column nearest each requested s (OutOfRange when s is off the grid).
CrestAndCuts crest_and_cuts(const KernelGrid &kernel, const std::vector<double> &s_values);

/// V_N(r, r) / D_N(r, r); OutsideTrustRegion when D_N(r, r) < 1e-12.
double crest_ratio(const BasisSet &basis, const OperatorMatrix &matrix, double r);
CurveSeries crest_ratio_curve(const BasisSet &basis, const OperatorMatrix &matrix,
                              const UniformAxis &axis);

}  // namespace matrep
