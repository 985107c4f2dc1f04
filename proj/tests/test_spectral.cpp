#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "matrep/errors.hpp"
#include "matrep/operators.hpp"
#include "matrep/spectral.hpp"
#include "oracles.hpp"

using namespace matrep;

namespace {

const PotentialSpec kWeakWell{{{1.0, 9.0}, {-1.0, 1.0}}};

OperatorMatrix t_plus_r(const BasisSet &set) {
  OperatorMatrix m = kinetic_matrix(set);
  m.entries += position_squared_matrix(set).entries;
  return m;
}

void expect_spectrum_contract(const OperatorMatrix &m, const Spectrum &sp) {
  for (Eigen::Index k = 0; k < sp.size(); ++k) {
    const Eigen::VectorXd c = sp.vectors.col(k);
    const double lambda = sp.eigenvalues(k);
    EXPECT_LT((m.entries * c - lambda * c).cwiseAbs().maxCoeff(),
              1e-10 * std::max(1.0, std::abs(lambda)));
    EXPECT_NEAR(c.norm(), 1.0, 1e-12);
    // Mirror-symmetric vectors tie in magnitude; one of the largest is positive.
    EXPECT_GE(c.maxCoeff(), c.cwiseAbs().maxCoeff() * (1.0 - 1e-8));
    if (k > 0) EXPECT_LE(sp.eigenvalues(k - 1), lambda);
  }
  EXPECT_NEAR(sp.eigenvalues.sum(), m.entries.trace(),
              1e-10 * std::max(1.0, m.entries.cwiseAbs().maxCoeff()));
}

}  // namespace

TEST(Spectral, OscillatorTPlusRIsExactlyOddIntegers) {
  for (int n : {10, 50, 200}) {
    const BasisSet set({Family::HarmonicOscillator, n});
    const OperatorMatrix m = t_plus_r(set);
    const Spectrum sp = eigen_symmetric(m);
    for (int i = 0; i < n; ++i) EXPECT_NEAR(sp.eigenvalues(i), 2 * i + 1, 1e-10) << n;
    if (n == 50) expect_spectrum_contract(m, sp);
  }
}

TEST(Spectral, ShiftedGaussianTPlusR) {
  const BasisSet set({Family::ShiftedGaussians, 50, 1.0, 1.0});
  const OperatorMatrix m = t_plus_r(set);
  const Spectrum sp = eigen_symmetric(m);
  expect_spectrum_contract(m, sp);
  const double expected[] = {1.00043, 3.00005, 5.05263, 7.0184, 9.6656, 11.3889, 15.7908};
  for (int k = 0; k < 7; ++k) EXPECT_NEAR(sp.eigenvalues(k) / expected[k], 1.0, 1e-3) << k;
}

TEST(Spectral, OrthonormalizationMethodDoesNotChangeSpectrum) {
  for (Family family : {Family::ShiftedGaussians, Family::SymmetricPairs}) {
    BasisSpec spec{family, family == Family::SymmetricPairs ? 25 : 40, 0.5, 0.5};
    if (family == Family::ShiftedGaussians) spec.beta = spec.sigma = 1.0;
    const BasisSet lowdin(spec);
    spec.ortho = OrthoMethod::GramSchmidt;
    const BasisSet gs(spec);
    const Eigen::VectorXd a = eigen_symmetric(hamiltonian_matrix(lowdin, kWeakWell)).eigenvalues;
    const Eigen::VectorXd b = eigen_symmetric(hamiltonian_matrix(gs, kWeakWell)).eigenvalues;
    EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(Spectral, RejectsAsymmetricMatrix) {
  OperatorMatrix m{BasisSpec{}, Eigen::MatrixXd::Identity(3, 3), OperatorKind::Custom};
  m.entries(0, 2) = 0.5;
  try {
    eigen_symmetric(m);
    ADD_FAILURE();
  } catch (const NumericalError &e) {
    EXPECT_EQ(e.kind(), ErrorKind::ContractViolation);
  }
}

TEST(Spectral, WeakWellGalerkinEnergies) {
  const BasisSet h50({Family::HarmonicOscillator, 50});
  const BasisSet h100({Family::HarmonicOscillator, 100});
  const BasisSet even({Family::HarmonicOscillator, 100, 1.0, 1.0, Parity::Even});
  const double e50 = eigen_symmetric(hamiltonian_matrix(h50, kWeakWell)).ground();
  const double e100 = eigen_symmetric(hamiltonian_matrix(h100, kWeakWell)).ground();
  EXPECT_NEAR(e50, -0.171874, 5e-6);
  EXPECT_NEAR(e100, -0.172071, 5e-6);
  // The even half of the first 100 oscillator states has the same ground state.
  EXPECT_NEAR(eigen_symmetric(hamiltonian_matrix(even, kWeakWell)).ground(), e100, 1e-12);
  const BasisSet pairs({Family::SymmetricPairs, 25, 0.5, 0.5});
  const double ep = eigen_symmetric(hamiltonian_matrix(pairs, kWeakWell)).ground();
  EXPECT_NEAR(ep, -0.17194, 5e-5);
  EXPECT_LT(ep, e50);
}

TEST(Synthesis, UnitVectorGivesBasisFunction) {
  const BasisSet set({Family::HarmonicOscillator, 5});
  const UniformAxis axis = UniformAxis::symmetric(8.0, 0.01);
  const SampledWave w = synthesize(set, Eigen::VectorXd::Unit(5, 0), axis);
  for (std::size_t i = 0; i < axis.size(); i += 97) {
    EXPECT_NEAR(w.values[i], static_cast<double>(reference::explicit_hermite(0, axis.at(i))), 1e-15);
  }
  EXPECT_NEAR(w.norm_squared(), 1.0, 1e-6);
  const PeakMetrics pm = peak_metrics(w);
  EXPECT_NEAR(pm.max_abs, std::pow(std::numbers::pi, -0.25), 1e-15);
  EXPECT_NEAR(pm.peak_position, 0.0, 1e-12);
  // Half maximum of exp(-r^2/2) at r = sqrt(2 ln 2).
  EXPECT_NEAR(pm.fwhm, 2 * std::sqrt(2 * std::log(2.0)), 0.02);
  EXPECT_GE(pm.effective_range, pm.fwhm / 2);
}

TEST(Synthesis, NormalizedCoefficientsGiveUnitNorm) {
  auto rng = reference::seeded_rng();
  std::normal_distribution<double> gauss;
  const BasisSet set({Family::SymmetricPairs, 12, 0.5, 0.5});
  Eigen::VectorXd c(12);
  for (auto &x : c) x = gauss(rng);
  c.normalize();
  EXPECT_NEAR(synthesize(set, c, UniformAxis::symmetric(15.0, 0.01)).norm_squared(), 1.0, 1e-6);
}

TEST(PeakMetrics, Preconditions) {
  const BasisSet set({Family::HarmonicOscillator, 3});
  const SampledWave zero = synthesize(set, Eigen::VectorXd::Zero(3), UniformAxis::symmetric(5, 0.01));
  try {
    peak_metrics(zero);
    ADD_FAILURE();
  } catch (const NumericalError &e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateInput);
  }
  const SampledWave coarse = synthesize(set, Eigen::VectorXd::Unit(3, 0), UniformAxis::symmetric(5, 0.1));
  EXPECT_THROW(peak_metrics(coarse), NumericalError);
}

TEST(FlatWave, LowestKineticEigenfunction) {
  const UniformAxis axis = UniformAxis::symmetric(30.0, 0.02);
  PeakMetrics metrics[2];
  int slot = 0;
  for (int n : {50, 200}) {
    const BasisSet set({Family::HarmonicOscillator, n});
    const Spectrum sp = eigen_symmetric(kinetic_matrix(set));
    const SampledWave w = synthesize(set, sp.vectors.col(0), axis);
    EXPECT_NEAR(w.norm_squared(), 1.0, 1e-6);
    metrics[slot++] = peak_metrics(w);
  }
  EXPECT_GE(metrics[0].max_abs, 0.30);
  EXPECT_LE(metrics[0].max_abs, 0.34);
  EXPECT_NEAR(metrics[0].effective_range, 10.0, 2.0);
  EXPECT_GE(metrics[1].max_abs, 0.20);
  EXPECT_LE(metrics[1].max_abs, 0.24);
  EXPECT_NEAR(metrics[1].effective_range, 20.0, 3.0);
  const double ratio = metrics[1].max_abs / metrics[0].max_abs;
  EXPECT_GE(ratio, 0.64);
  EXPECT_LE(ratio, 0.74);
}

TEST(PositionSquared, GroundStateNarrowsWithN) {
  const UniformAxis axis = UniformAxis::symmetric(6.0, 0.001);
  double lambda[2];
  PeakMetrics metrics[2];
  int slot = 0;
  for (int n : {50, 200}) {
    const BasisSet set({Family::HarmonicOscillator, n});
    const OperatorMatrix r2 = position_squared_matrix(set);
    const Spectrum sp = eigen_symmetric(r2);
    expect_spectrum_contract(r2, sp);
    lambda[slot] = sp.ground();
    metrics[slot] = peak_metrics(synthesize(set, sp.vectors.col(0), axis));
    // Excited eigenfunctions are pairs of mirrored peaks.
    for (int k : {1, 2, 5}) {
      const SampledWave w = synthesize(set, sp.vectors.col(k), axis);
      const std::size_t last = axis.size() - 1;
      for (std::size_t i = 0; i <= last; i += 37)
        EXPECT_LT(std::abs(std::abs(w.values[i]) - std::abs(w.values[last - i])), 1e-9);
    }
    ++slot;
  }
  EXPECT_NEAR(lambda[0], 0.0244, 5e-4);
  EXPECT_NEAR(lambda[1], 0.0062, 2e-4);
  EXPECT_NEAR(metrics[1].fwhm / metrics[0].fwhm, 0.5, 0.1);
  EXPECT_NEAR(metrics[1].max_abs / metrics[0].max_abs, std::sqrt(2.0), 0.15);
}
