#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

namespace matrep {

enum class Family { HarmonicOscillator, ShiftedGaussians, CenteredGaussians, SymmetricPairs };
enum class Parity { Even, Odd, Both };
enum class OrthoMethod { Lowdin, GramSchmidt };

/// Declarative description of an expansion family.
///
/// `sigma` is the spacing between Gaussian centers and is ignored for the
/// oscillator family; `parity` only applies to the oscillator family, where it
/// keeps the functions of that parity among degrees 0 .. n-1 (so an even
/// family with n = 100 holds 50 functions).
struct BasisSpec {
  Family family = Family::HarmonicOscillator;
  int n = 1;
  double beta = 1.0;
  double sigma = 1.0;
  Parity parity = Parity::Both;
  OrthoMethod ortho = OrthoMethod::Lowdin;

  /// Throws InvalidSpec when the description cannot be realized.
  void validate() const;

  bool operator==(const BasisSpec &) const = default;
};

/// Unit-normalized Gaussian pi^{-1/4} beta^{-1/2} exp(-(r-center)^2 / (2 beta^2))
/// carrying a linear-combination weight.
struct GaussianTerm {
  double center;
  double weight;
};

/// Raw (non-orthonormal) expansion family with its overlap matrix.
///
/// Oscillator families are described by their Hermite degrees; Gaussian
/// families by the Gaussian terms making up each raw function (one term for
/// translated Gaussians, two for symmetric pairs).
struct RawFamily {
  BasisSpec spec;
  std::vector<int> degrees;
  std::vector<std::vector<GaussianTerm>> gaussians;
  Eigen::MatrixXd gram;

  Eigen::Index size() const { return gram.rows(); }
  bool is_oscillator() const { return !degrees.empty(); }

  /// Values of every raw function at r.
  Eigen::VectorXd values(double r) const;
  /// Integral over the real line of every raw function.
  Eigen::VectorXd moments() const;
};

RawFamily build_raw_family(const BasisSpec &spec);

/// Overlap of two unit-normalized Gaussians of width beta centered at a and b.
double gaussian_overlap(double a, double b, double beta);

/// Coefficient matrix C with C S C^T = I.
///
/// Lowdin returns S^{-1/2}; Gram-Schmidt returns a lower-triangular C from
/// modified Gram-Schmidt in the S inner product. Throws IllConditionedBasis
/// when the condition number of S exceeds 1e12.
Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd &gram, OrthoMethod method);

/// Coefficients of the dual family tau_i = sum_j D_ij phi_j, <tau_i|phi_j> = delta_ij.
struct DualBasis {
  Eigen::MatrixXd coeff;
};

DualBasis dual_basis(const Eigen::MatrixXd &gram);

/// Orthonormal family chi_i(r) = sum_j coeff(i, j) phi_j(r).
class BasisSet {
 public:
  explicit BasisSet(const BasisSpec &spec);

  const BasisSpec &spec() const { return raw_.spec; }
  const RawFamily &raw() const { return raw_; }
  const Eigen::MatrixXd &gram() const { return raw_.gram; }
  const Eigen::MatrixXd &coeff() const { return coeff_; }
  double condition() const { return condition_; }
  Eigen::Index size() const { return raw_.size(); }

  /// chi_i(r) with the 1-based index i in [1, N].
  double evaluate(int i, double r) const;
  /// All N orthonormal functions at r.
  Eigen::VectorXd values(double r) const;
  /// Matrix with one column of values(r) per sample point.
  Eigen::MatrixXd values(const std::vector<double> &points) const;
  /// Integrals of every chi_i over the real line.
  Eigen::VectorXd moments() const;

  /// +1 / -1 when chi_i (1-based) has definite parity, 0 otherwise.
  int parity_of(int i) const;

  /// Half-width of the region where plain quadrature captures every function.
  double support_half_width() const;

 private:
  RawFamily raw_;
  Eigen::MatrixXd coeff_;
  double condition_;
};

}  // namespace matrep
