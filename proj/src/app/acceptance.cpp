#include "matrep/app/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "matrep/errors.hpp"
#include "matrep/feshbach.hpp"
#include "matrep/hermite.hpp"
#include "matrep/kernels.hpp"
#include "matrep/operators.hpp"
#include "matrep/oracle.hpp"
#include "matrep/quadrature.hpp"
#include "matrep/spectral.hpp"

namespace matrep::app {

namespace {

const PotentialSpec kWeakWell{{{1.0, 9.0}, {-1.0, 1.0}}};
const PotentialSpec kDeepWell{{{10.0, 9.0}, {-5.0, 1.0}}};
const PotentialSpec kAttractive{{{-1.0, 1.0}}};
const PotentialSpec kNarrowBarrier{{{1.0, 9.0}}};

std::string num(double x, int digits = 10) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

bool within(double x, double lo, double hi) { return x >= lo && x <= hi; }

// Measurements shared by several criteria.
struct Context {
  double oracle_weak = 0.0;
  double oracle_deep = 0.0;
  double r2_perturbation = 0.0;
};

class Report {
 public:
  void add(const std::string &label, double value) {
    if (!text_.empty()) text_ += ' ';
    text_ += label + '=' + num(value);
  }
  void check(bool ok) { pass_ = pass_ && ok; }
  bool pass() const { return pass_; }
  const std::string &text() const { return text_; }

 private:
  std::string text_;
  bool pass_ = true;
};

double direct_identity(int n, double r, double s) {
  const auto a = hermite_functions(n - 1, r);
  const auto b = hermite_functions(n - 1, s);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

OperatorMatrix r2_matrix(const BasisSet &set, double perturbation) {
  OperatorMatrix m = position_squared_matrix(set);
  if (perturbation != 0.0) {
    for (Eigen::Index i = 0; i + 2 < m.size(); ++i) {
      m.entries(i, i + 2) *= 1.0 + perturbation;
      m.entries(i + 2, i) *= 1.0 + perturbation;
    }
  }
  return m;
}

double ground(const OperatorMatrix &m) { return eigen_symmetric(m).ground(); }

std::pair<double, double> band(const CurveSeries &c) {
  const auto [lo, hi] = std::minmax_element(c.y.begin(), c.y.end());
  return {*lo, *hi};
}

double cr_error(int n, const PotentialSpec &v) {
  const BasisSet set({Family::HarmonicOscillator, n});
  const OperatorMatrix m = local_potential_matrix(set, v);
  double worst = 0.0, peak = 0.0;
  for (int k = -300; k <= 300; ++k) {
    const double r = 0.01 * k;
    worst = std::max(worst, std::abs(crest_ratio(set, m, r) - v(r)));
    peak = std::max(peak, std::abs(v(r)));
  }
  return worst / peak;
}

void oracle_states(Context &ctx, Report &rep) {
  ctx.oracle_weak = fd_ground_state({kWeakWell}).eigenvalue;
  ctx.oracle_deep = fd_ground_state({kDeepWell}).eigenvalue;
  rep.add("weak", ctx.oracle_weak);
  rep.add("deep", ctx.oracle_deep);
  rep.check(std::abs(ctx.oracle_weak + 0.1720763) <= 1e-6);
  rep.check(std::abs(ctx.oracle_deep + 0.7342256) <= 1e-6);
}

void galerkin(Context &, Report &rep) {
  const double e50 = ground(hamiltonian_matrix(BasisSet({Family::HarmonicOscillator, 50}), kWeakWell));
  const double e100 =
      ground(hamiltonian_matrix(BasisSet({Family::HarmonicOscillator, 100}), kWeakWell));
  rep.add("e50", e50);
  rep.add("e100", e100);
  rep.check(std::abs(e50 + 0.171874) <= 5e-6);
  rep.check(std::abs(e100 + 0.172071) <= 5e-6);
}

void feshbach(Context &, Report &rep) {
  const BasisSet set({Family::HarmonicOscillator, 52, 1.0, 1.0, Parity::Even});
  const FeshbachPartition part = partition(hamiltonian_matrix(set, kDeepWell), 5, 26);
  const double retained = eigen_symmetric(part.retained()).ground();
  const double php = eigen_symmetric(part.php).ground();
  const EffectiveSolve sol = solve_selfconsistent(part);
  rep.add("retained", retained);
  rep.add("php", php);
  rep.add("selfconsistent_gap", std::abs(sol.energy - retained));
  rep.check(std::abs(retained + 0.7342) <= 1e-4);
  rep.check(std::abs(php + 0.6897) <= 1e-4);
  rep.check(std::abs(sol.energy - retained) <= 1e-8);
}

void christoffel_darboux_suite(Context &, Report &rep) {
  std::mt19937_64 rng(20261016ULL);
  std::uniform_int_distribution<int> pick_n(1, 200);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double worst_cd = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const int n = pick_n(rng);
    const double box = 1.5 * std::sqrt(n);
    const double r = box * unit(rng);
    const double s = k % 4 == 0 ? r + 1e-7 * unit(rng) : box * unit(rng);
    worst_cd = std::max(worst_cd, std::abs(christoffel_darboux(n, r, s) - direct_identity(n, r, s)));
  }
  double worst_r2 = 0.0;
  const int sizes[] = {5, 50, 200};
  for (int k = 0; k < 300; ++k) {
    const int n = sizes[k % 3];
    const BasisSet set({Family::HarmonicOscillator, n});
    const OperatorMatrix r2 = position_squared_matrix(set);
    const double box = 1.5 * std::sqrt(n);
    const double r = box * unit(rng), s = box * unit(rng);
    const double residual =
        r * r * direct_identity(n, r, s) - (operator_kernel(set, r2, r, s) + r2_corrective_terms(n, r, s));
    worst_r2 = std::max(worst_r2, std::abs(residual));
  }
  rep.add("cd_residual", worst_cd);
  rep.add("r2_residual", worst_r2);
  rep.check(worst_cd < 1e-9);
  rep.check(worst_r2 < 1e-9);
}

void cut_weight_bands(Context &, Report &rep) {
  const auto [lo50, hi50] = band(weight_curve(BasisSet({Family::HarmonicOscillator, 50}),
                                              UniformAxis::symmetric(5.0, 0.02)));
  const auto [lo200, hi200] = band(weight_curve(BasisSet({Family::HarmonicOscillator, 200}),
                                                UniformAxis::symmetric(10.0, 0.02)));
  rep.add("n50_min", lo50);
  rep.add("n50_max", hi50);
  rep.add("n200_min", lo200);
  rep.add("n200_max", hi200);
  rep.check(within(1.0 - lo50, 0.05, 0.10) && within(hi50 - 1.0, 0.05, 0.10));
  rep.check(within(1.0 - lo200, 0.02, 0.05) && within(hi200 - 1.0, 0.02, 0.05));
  rep.check(hi200 - lo200 < hi50 - lo50);
}

void kinetic_amplitude(Context &, Report &rep) {
  double amp[2];
  int slot = 0;
  for (int n : {50, 200}) {
    const BasisSet set({Family::HarmonicOscillator, n});
    const auto [lo, hi] = band(
        weight_curve(set, kinetic_matrix(set), UniformAxis::symmetric(n == 50 ? 5.0 : 10.0, 0.02)));
    amp[slot++] = (hi - lo) / 2;
  }
  rep.add("n50", amp[0]);
  rep.add("n200", amp[1]);
  rep.check(within(amp[0], 3.0, 5.0));
  rep.check(within(amp[1], 6.0, 10.0));
  rep.check(amp[1] > amp[0]);
}

void r2_diagnostics(Context &ctx, Report &rep) {
  double worst_cr0 = 0.0;
  for (int n : {10, 50, 200}) {
    const BasisSet set({Family::HarmonicOscillator, n});
    worst_cr0 = std::max(worst_cr0, std::abs(crest_ratio(set, r2_matrix(set, ctx.r2_perturbation), 0.0) - 0.5));
  }
  rep.add("cr0_dev", worst_cr0);
  rep.check(worst_cr0 <= 1e-9);

  double sums[3] = {0.0, 0.0, 0.0};
  int count = 0;
  for (int n = 150; n <= 200; ++n, ++count) {
    const BasisSet set({Family::HarmonicOscillator, n});
    const OperatorMatrix m = r2_matrix(set, ctx.r2_perturbation);
    for (int k = 0; k < 3; ++k) sums[k] += crest_ratio(set, m, k + 1.0);
  }
  for (int k = 0; k < 3; ++k) {
    const double r = k + 1.0;
    const double rel = sums[k] / count / (r * r + 0.5) - 1.0;
    rep.add("avg_rel_dev_r" + std::to_string(k + 1), rel);
    rep.check(std::abs(rel) <= 0.05);
  }

  const double l50 = ground(r2_matrix(BasisSet({Family::HarmonicOscillator, 50}), ctx.r2_perturbation));
  const double l200 = ground(r2_matrix(BasisSet({Family::HarmonicOscillator, 200}), ctx.r2_perturbation));
  rep.add("lambda50", l50);
  rep.add("lambda200", l200);
  rep.check(std::abs(l50 - 0.0244) <= 5e-4);
  rep.check(std::abs(l200 - 0.0062) <= 2e-4);
}

void potential_cr(Context &, Report &rep) {
  const double a50 = cr_error(50, kAttractive), a200 = cr_error(200, kAttractive);
  const double b50 = cr_error(50, kNarrowBarrier), b200 = cr_error(200, kNarrowBarrier);
  rep.add("well50", a50);
  rep.add("well200", a200);
  rep.add("barrier50", b50);
  rep.add("barrier200", b200);
  rep.check(within(a50, 0.03, 0.09) && within(a200, 0.015, 0.05) && a200 < a50);
  rep.check(within(b50, 0.10, 0.25) && within(b200, 0.04, 0.12));
}

void shifted_spectrum(Context &, Report &rep) {
  const BasisSet set({Family::ShiftedGaussians, 50, 1.0, 1.0});
  OperatorMatrix m = kinetic_matrix(set);
  m.entries += position_squared_matrix(set).entries;
  const Eigen::VectorXd ev = eigen_symmetric(m).eigenvalues;
  const double expected[] = {1.00043, 3.00005, 5.05263, 7.0184, 9.6656, 11.3889, 15.7908};
  double worst_low = 0.0, worst_high = 0.0;
  for (int k = 0; k < 7; ++k) {
    const double rel = std::abs(ev(k) / expected[k] - 1.0);
    (k < 4 ? worst_low : worst_high) = std::max(k < 4 ? worst_low : worst_high, rel);
  }
  for (int k = 0; k < 7; ++k) rep.add("e" + std::to_string(k + 1), ev(k));
  rep.add("rel_dev_1to4", worst_low);
  rep.add("rel_dev_5to7", worst_high);
  rep.check(worst_low <= 1e-3);
  rep.check(worst_high <= 5e-2);
}

void symmetric_pairs(Context &ctx, Report &rep) {
  const BasisSet set({Family::SymmetricPairs, 25, 0.5, 0.5});
  const double e = ground(hamiltonian_matrix(set, kWeakWell));
  const double e50 = ground(hamiltonian_matrix(BasisSet({Family::HarmonicOscillator, 50}), kWeakWell));
  const double exact = ctx.oracle_weak != 0.0 ? ctx.oracle_weak : fd_ground_state({kWeakWell}).eigenvalue;
  const auto [lo, hi] = band(weight_curve(set, UniformAxis::symmetric(8.0, 0.02)));
  rep.add("ground", e);
  rep.add("w_min", lo);
  rep.add("w_max", hi);
  rep.check(std::abs(e + 0.17194) <= 5e-5);
  rep.check(std::abs(e - exact) < std::abs(e50 - exact));
  rep.check(lo >= 0.955 && hi <= 1.045);
}

void flat_wave(Context &, Report &rep) {
  const UniformAxis axis = UniformAxis::symmetric(30.0, 0.02);
  double peak[2];
  int slot = 0;
  for (int n : {50, 200}) {
    const BasisSet set({Family::HarmonicOscillator, n});
    const Spectrum sp = eigen_symmetric(kinetic_matrix(set));
    peak[slot++] = peak_metrics(synthesize(set, sp.vectors.col(0), axis)).max_abs;
  }
  rep.add("max50", peak[0]);
  rep.add("max200", peak[1]);
  rep.add("ratio", peak[1] / peak[0]);
  rep.check(within(peak[0], 0.30, 0.34));
  rep.check(within(peak[1], 0.20, 0.24));
  rep.check(within(peak[1] / peak[0], 0.64, 0.74));
}

void exact_diagonality(Context &, Report &rep) {
  double worst = 0.0;
  for (int n : {10, 50, 200}) {
    const BasisSet set({Family::HarmonicOscillator, n});
    OperatorMatrix m = kinetic_matrix(set);
    m.entries += position_squared_matrix(set).entries;
    const Eigen::VectorXd ev = eigen_symmetric(m).eigenvalues;
    for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(ev(i) - (2 * i + 1)));
  }
  rep.add("max_dev", worst);
  rep.check(worst <= 1e-10);
}

void property_suites(Context &ctx, Report &rep) {
  // Exchange and point-reflection symmetry of rendered kernels.
  double sym = 0.0;
  {
    const BasisSet set({Family::HarmonicOscillator, 30});
    const UniformAxis axis = default_kernel_axis(30);
    std::vector<KernelGrid> grids = {render_identity_kernel(set, axis, axis)};
    for (const auto &m : {kinetic_matrix(set), position_squared_matrix(set),
                          local_potential_matrix(set, kAttractive)}) {
      grids.push_back(render_kernel(set, m, axis, axis));
    }
    for (const auto &g : grids) {
      sym = std::max(sym, (g.values - g.values.transpose()).cwiseAbs().maxCoeff());
      sym = std::max(sym, (g.values - g.values.reverse()).cwiseAbs().maxCoeff());
    }
  }
  // Idempotency and reproducing property with exact Gauss-Hermite sums.
  double idem = 0.0, repro = 0.0;
  for (int n : {5, 50}) {
    const BasisSet set({Family::HarmonicOscillator, n});
    const QuadratureRule rule = gauss_hermite_rule(2 * n + 20);
    for (double r : {0.0, 1.1, -2.5}) {
      for (double s : {0.4, 3.0}) {
        const double sq = rule.integrate(
            [&](double t) { return identity_kernel(set, r, t) * identity_kernel(set, t, s); });
        idem = std::max(idem, std::abs(sq - identity_kernel(set, r, s)));
      }
      for (int k = 1; k <= n; k += std::max(1, n / 7)) {
        const double image =
            rule.integrate([&](double s) { return identity_kernel(set, r, s) * set.evaluate(k, s); });
        repro = std::max(repro, std::abs(image - set.evaluate(k, r)));
      }
    }
  }
  // Kernel through the dual pair against the orthonormal family.
  double dual = 0.0;
  {
    const BasisSet set({Family::ShiftedGaussians, 50, 1.0, 1.0});
    const DualBasis d = dual_basis(set.gram());
    for (int i = 0; i <= 40; ++i) {
      for (int j = 0; j <= 40; ++j) {
        const double r = -8.0 + 0.4 * i, s = -8.0 + 0.4 * j;
        dual = std::max(dual, std::abs(dual_identity_kernel(set, d, r, s) - identity_kernel(set, r, s)));
      }
    }
  }
  // Spectra under the two orthonormalizations, and trace preservation.
  double ortho = 0.0, trace = 0.0;
  {
    BasisSpec spec{Family::ShiftedGaussians, 40, 1.0, 1.0};
    const OperatorMatrix a = hamiltonian_matrix(BasisSet(spec), kWeakWell);
    spec.ortho = OrthoMethod::GramSchmidt;
    const OperatorMatrix b = hamiltonian_matrix(BasisSet(spec), kWeakWell);
    const Spectrum sa = eigen_symmetric(a);
    ortho = (sa.eigenvalues - eigen_symmetric(b).eigenvalues).cwiseAbs().maxCoeff();
    trace = std::abs(sa.eigenvalues.sum() - a.entries.trace());
  }
  // Variational ordering of the deep well.
  bool ordered = false;
  {
    const BasisSet set({Family::HarmonicOscillator, 52, 1.0, 1.0, Parity::Even});
    const FeshbachPartition part = partition(hamiltonian_matrix(set, kDeepWell), 5, 26);
    const double exact =
        ctx.oracle_deep != 0.0 ? ctx.oracle_deep : fd_ground_state({kDeepWell}).eigenvalue;
    const double php = eigen_symmetric(part.php).ground();
    const double retained = eigen_symmetric(part.retained()).ground();
    ordered = php > retained && retained > exact;
  }
  rep.add("symmetry", sym);
  rep.add("idempotency", idem);
  rep.add("reproducing", repro);
  rep.add("dual", dual);
  rep.add("ortho_invariance", ortho);
  rep.add("trace", trace);
  rep.add("variational_ordering", ordered ? 1.0 : 0.0);
  rep.check(sym <= 1e-10);
  rep.check(idem <= 1e-8);
  rep.check(repro <= 1e-8);
  rep.check(dual <= 1e-8);
  rep.check(ortho <= 1e-9);
  rep.check(trace <= 1e-10);
  rep.check(ordered);
}

struct Criterion {
  int id;
  const char *title;
  const char *tolerance;
  std::function<void(Context &, Report &)> run;
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &options) {
  const std::vector<Criterion> table = {
      {1, "oracle ground states", "+-1e-6 of -0.1720763, -0.7342256", oracle_states},
      {2, "oscillator Galerkin energies", "+-5e-6 of -0.171874, -0.172071", galerkin},
      {3, "Feshbach partition", "+-1e-4 of -0.7342, -0.6897; self-consistent gap <= 1e-8",
       feshbach},
      {4, "Christoffel-Darboux and r^2 compact forms", "residuals < 1e-9",
       christoffel_darboux_suite},
      {5, "identity cut-weight bands", "N=50 dev in [0.05,0.10]; N=200 dev in [0.02,0.05]; narrower",
       cut_weight_bands},
      {6, "kinetic weight amplitude", "N=50 in [3,5]; N=200 in [6,10]; growing", kinetic_amplitude},
      {7, "r^2 diagnostics", "CR(0) +-1e-9; averaged CR within 5%; lambda +-5e-4, +-2e-4",
       r2_diagnostics},
      {8, "local potential crest-ratio errors",
       "well [0.03,0.09],[0.015,0.05] decreasing; barrier [0.10,0.25],[0.04,0.12]", potential_cr},
      {9, "shifted-Gaussian T+R spectrum", "rel 1e-3 (1-4), 5e-2 (5-7)", shifted_spectrum},
      {10, "symmetric-pairs basis", "+-5e-5 of -0.17194; beats N=50 oscillator; w in [0.955,1.045]",
       symmetric_pairs},
      {11, "flat-wave peaks", "[0.30,0.34], [0.20,0.24], ratio [0.64,0.74]", flat_wave},
      {12, "T+R exact diagonality", "<= 1e-10", exact_diagonality},
      {13, "property suites", "symmetry 1e-10, idempotency/reproducing/dual 1e-8, ortho 1e-9, trace 1e-10",
       property_suites},
  };

  Context ctx;
  ctx.r2_perturbation = options.r2_perturbation;
  std::vector<CriterionResult> results;
  for (const auto &c : table) {
    CriterionResult res{c.id, c.title, {}, c.tolerance, false};
    Report rep;
    try {
      c.run(ctx, rep);
      res.measured = rep.text();
      res.pass = rep.pass();
    } catch (const std::exception &e) {
      res.measured = std::string("error: ") + e.what();
    }
    results.push_back(std::move(res));
  }
  return results;
}

void print_report(std::ostream &out, const std::vector<CriterionResult> &results) {
  std::vector<int> failing;
  for (const auto &r : results) {
    out << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << ": " << r.measured
        << "  (tolerance: " << r.tolerance << ")\n";
    if (!r.pass) failing.push_back(r.id);
  }
  if (failing.empty()) {
    out << "all " << results.size() << " criteria passed\n";
  } else {
    out << "failing criteria:";
    for (int id : failing) out << ' ' << id;
    out << '\n';
  }
}

bool all_passed(const std::vector<CriterionResult> &results) {
  return std::all_of(results.begin(), results.end(), [](const auto &r) { return r.pass; });
}

}  // namespace matrep::app
