#include "matrep/app/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "matrep/app/acceptance.hpp"
#include "matrep/app/config.hpp"
#include "matrep/app/csv.hpp"
#include "matrep/errors.hpp"
#include "matrep/feshbach.hpp"
#include "matrep/kernels.hpp"
#include "matrep/operators.hpp"
#include "matrep/oracle.hpp"
#include "matrep/spectral.hpp"

namespace matrep::app {

namespace {

struct Invocation {
  Settings file;
  Settings flags;
  ExperimentConfig config;
  std::ostream *console = nullptr;

  bool given(const std::string &key) const { return file.count(key) || flags.count(key); }
};

// Writes to --out when given, otherwise to the console.
void emit(const Invocation &inv, const std::function<void(std::ostream &)> &write) {
  if (!inv.config.out) {
    write(*inv.console);
    return;
  }
  std::ofstream file(*inv.config.out, std::ios::binary);
  if (!file) throw IoError("cannot open " + *inv.config.out + " for writing");
  write(file);
  file.flush();
  if (!file) throw IoError("failed writing " + *inv.config.out);
}

// Summary lines go to the console only when the main output went to a file,
// so console output stays a single parseable document.
void summary(const Invocation &inv, const std::string &key, double value) {
  if (inv.config.out) *inv.console << key << '=' << format_number(value) << '\n';
}

PotentialSpec gaussian_potential(const Invocation &inv, bool required) {
  if (!inv.config.potential) {
    if (required) throw ParseError("--potential is required for this operator");
    return {};
  }
  if (inv.config.potential->quadratic != 0.0) {
    throw ParseError("a bare r^2 term is accepted by the oracle command only");
  }
  return inv.config.potential->gaussians;
}

std::optional<OperatorMatrix> operator_matrix(const Invocation &inv, const BasisSet &set,
                                              OperatorChoice op) {
  switch (op) {
    case OperatorChoice::Identity: return std::nullopt;
    case OperatorChoice::Kinetic: return kinetic_matrix(set);
    case OperatorChoice::R2: return position_squared_matrix(set);
    case OperatorChoice::Potential:
      return local_potential_matrix(set, gaussian_potential(inv, true));
    case OperatorChoice::Hamiltonian: return hamiltonian_matrix(set, gaussian_potential(inv, false));
    case OperatorChoice::Separable: {
      const PotentialSpec xi = gaussian_potential(inv, true);
      return separable_matrix(set, separable_projection(set, std::cref(xi), default_rule(set)));
    }
  }
  return std::nullopt;
}

UniformAxis kernel_axis(const Invocation &inv, Eigen::Index n) {
  return inv.config.grid ? *inv.config.grid : default_kernel_axis(n);
}

// Curves default to the kernel window at a finer step.
UniformAxis curve_axis(const Invocation &inv, Eigen::Index n) {
  return inv.config.grid ? *inv.config.grid
                         : UniformAxis::symmetric(default_kernel_axis(n).max, 0.02);
}

// Crest ratios default to the trust box |r| <= 1.5 sqrt(N).
UniformAxis trust_axis(const Invocation &inv, Eigen::Index n) {
  if (inv.config.grid) return *inv.config.grid;
  const double half = std::floor(1.5 * std::sqrt(static_cast<double>(n)) * 50.0) / 50.0;
  return UniformAxis::symmetric(half, 0.02);
}

KernelGrid kernel_grid(const Invocation &inv) {
  const BasisSet set(inv.config.basis);
  const UniformAxis axis = kernel_axis(inv, set.size());
  const auto m = operator_matrix(inv, set, inv.config.op.value_or(OperatorChoice::Identity));
  return m ? render_kernel(set, *m, axis, axis) : render_identity_kernel(set, axis, axis);
}

void cmd_kernel(const Invocation &inv) {
  const KernelGrid g = kernel_grid(inv);
  emit(inv, [&](std::ostream &o) { write_grid(o, g); });
}

void cmd_crest(const Invocation &inv) {
  const CurveSeries crest = crest_and_cuts(kernel_grid(inv), {}).crest;
  emit(inv, [&](std::ostream &o) { write_curve(o, crest); });
}

void cmd_cuts(const Invocation &inv) {
  const auto cuts = crest_and_cuts(kernel_grid(inv), inv.config.s_values).cuts;
  emit(inv, [&](std::ostream &o) { write_cuts(o, cuts); });
}

void cmd_weight(const Invocation &inv) {
  const BasisSet set(inv.config.basis);
  const UniformAxis axis = curve_axis(inv, set.size());
  const auto m = operator_matrix(inv, set, inv.config.op.value_or(OperatorChoice::Identity));
  const CurveSeries c = m ? weight_curve(set, *m, axis) : weight_curve(set, axis);
  emit(inv, [&](std::ostream &o) { write_curve(o, c); });
  const auto [lo, hi] = std::minmax_element(c.y.begin(), c.y.end());
  summary(inv, "min", *lo);
  summary(inv, "max", *hi);
}

void cmd_crest_ratio(const Invocation &inv) {
  const BasisSet set(inv.config.basis);
  const OperatorChoice fallback =
      inv.config.potential ? OperatorChoice::Potential : OperatorChoice::R2;
  const OperatorChoice op = inv.config.op.value_or(fallback);
  const auto m = operator_matrix(inv, set, op);
  if (!m) throw ParseError("crest-ratio needs an operator other than identity");
  const CurveSeries c = crest_ratio_curve(set, *m, trust_axis(inv, set.size()));
  emit(inv, [&](std::ostream &o) { write_curve(o, c); });
}

void cmd_eigen(const Invocation &inv) {
  const BasisSet set(inv.config.basis);
  const auto m = operator_matrix(inv, set, inv.config.op.value_or(OperatorChoice::Hamiltonian));
  if (!m) throw ParseError("eigen needs an operator other than identity");
  const Spectrum sp = eigen_symmetric(*m);
  emit(inv, [&](std::ostream &o) { write_spectrum(o, sp); });
  summary(inv, "ground", sp.ground());
}

void cmd_flat_wave(const Invocation &inv) {
  const BasisSet set(inv.config.basis);
  const Spectrum sp = eigen_symmetric(kinetic_matrix(set));
  const double half = 1.5 * std::sqrt(2.0 * static_cast<double>(set.size())) + 5.0;
  const UniformAxis axis = inv.config.grid ? *inv.config.grid : UniformAxis::symmetric(half, 0.02);
  const SampledWave w = synthesize(set, sp.vectors.col(0), axis);
  const CurveSeries c{axis.points(), w.values, CurveLabel::Crest, 0.0};
  emit(inv, [&](std::ostream &o) { write_curve(o, c); });
  const PeakMetrics pm = peak_metrics(w);
  summary(inv, "eigenvalue", sp.ground());
  summary(inv, "max_abs", pm.max_abs);
  summary(inv, "effective_range", pm.effective_range);
  summary(inv, "fwhm", pm.fwhm);
}

void cmd_r2_local(const Invocation &inv) {
  const BasisSet set(inv.config.basis);
  const OperatorMatrix r2 = position_squared_matrix(set);
  const CurveSeries c = crest_ratio_curve(set, r2, trust_axis(inv, set.size()));
  emit(inv, [&](std::ostream &o) { write_curve(o, c); });
  summary(inv, "lambda1", eigen_symmetric(r2).ground());
  summary(inv, "cr0", crest_ratio(set, r2, 0.0));
}

void cmd_feshbach(const Invocation &inv) {
  const BasisSet set(inv.config.basis);
  const PotentialSpec v = gaussian_potential(inv, true);
  const FeshbachPartition part = partition(hamiltonian_matrix(set, v), inv.config.n1, inv.config.n2);
  const EffectiveSolve sol = solve_selfconsistent(part);
  std::ostream &o = *inv.console;
  o << "php_ground=" << format_number(eigen_symmetric(part.php).ground()) << '\n';
  o << "retained_ground=" << format_number(eigen_symmetric(part.retained()).ground()) << '\n';
  o << "energy=" << format_number(sol.energy) << '\n';
  o << "iterations=" << sol.iterations << '\n';
  if (inv.config.out) {
    const UniformAxis axis = kernel_axis(inv, inv.config.n1);
    const KernelGrid g = render_effective(set, part, sol.energy, axis, axis);
    emit(inv, [&](std::ostream &f) { write_grid(f, g); });
  }
}

void cmd_oracle(const Invocation &inv) {
  if (!inv.config.potential) throw ParseError("--potential is required");
  const OracleSolution s =
      fd_ground_state(*inv.config.potential, inv.config.half_width, inv.config.npoints);
  std::ostream &o = *inv.console;
  o << "eigenvalue=" << format_number(s.eigenvalue) << '\n';
  o << "coarse=" << format_number(s.coarse_eigenvalue) << '\n';
  o << "fine=" << format_number(s.fine_eigenvalue) << '\n';
  o << "richardson_error=" << format_number(s.richardson_error) << '\n';
  if (inv.config.out) {
    const CurveSeries c{s.wave.axis.points(), s.wave.values, CurveLabel::Crest, 0.0};
    emit(inv, [&](std::ostream &f) { write_curve(f, c); });
  }
}

std::string one_line(std::string text) {
  for (char &c : text) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return text;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Finite-basis matrix representations of one-dimensional operators"};
  app.require_subcommand(1);

  using Handler = void (*)(const Invocation &);
  struct Command {
    const char *name;
    const char *help;
    Handler handler;
  };
  const Command commands[] = {
      {"kernel", "render an operator kernel on an (r, s) grid", cmd_kernel},
      {"crest", "diagonal K(r, r) of a kernel", cmd_crest},
      {"cuts", "cuts K(., s) at the --s-values", cmd_cuts},
      {"weight", "cut weight integral of a kernel over r", cmd_weight},
      {"crest-ratio", "crest ratio K(r, r) / D(r, r)", cmd_crest_ratio},
      {"eigen", "spectrum of an operator matrix", cmd_eigen},
      {"flat-wave", "lowest kinetic eigenfunction and its peak metrics", cmd_flat_wave},
      {"r2-local", "crest ratio and ground eigenvalue of the r^2 matrix", cmd_r2_local},
      {"feshbach", "P/Q partition and self-consistent effective energy", cmd_feshbach},
      {"oracle", "finite-difference ground state", cmd_oracle},
  };

  std::map<std::string, Settings> raw;
  std::map<std::string, std::string> config_paths;
  std::map<CLI::App *, Handler> handlers;
  for (const auto &c : commands) {
    CLI::App *sub = app.add_subcommand(c.name, c.help);
    Settings &values = raw[c.name];
    for (const auto &key : known_keys()) sub->add_option("--" + key, values[key]);
    sub->add_option("--config", config_paths[c.name], "flat key = value file");
    handlers[sub] = c.handler;
  }
  double perturb = 0.0;
  CLI::App *accept = app.add_subcommand("accept", "run the acceptance table");
  accept->add_option("--perturb-r2", perturb, "relative change to the r^2 off-diagonal coefficients");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kExitParse;
  }

  try {
    if (accept->parsed()) {
      const auto results = run_acceptance({perturb});
      print_report(out, results);
      return all_passed(results) ? kExitOk : kExitAcceptanceFailed;
    }
    for (const auto &[sub, handler] : handlers) {
      if (!sub->parsed()) continue;
      Invocation inv;
      inv.console = &out;
      for (const auto &key : known_keys()) {
        if (sub->count("--" + key) > 0) inv.flags[key] = raw[sub->get_name()][key];
      }
      if (sub->count("--config") > 0) inv.file = read_config_file(config_paths[sub->get_name()]);
      ExperimentConfig defaults;
      if (sub->get_name() == "feshbach") {
        defaults.basis = {Family::HarmonicOscillator, 52, 1.0, 1.0, Parity::Even};
      }
      inv.config = resolve(inv.file, inv.flags, defaults);
      // The feshbach basis follows n2 unless its size is set explicitly: n2
      // even functions need a ladder of 2 n2 oscillator states.
      if (sub->get_name() == "feshbach" && !inv.given("n")) {
        inv.config.basis.n = inv.config.basis.parity == Parity::Both ? inv.config.n2 : 2 * inv.config.n2;
      }
      handler(inv);
    }
  } catch (const ParseError &e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kExitParse;
  } catch (const IoError &e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kExitIo;
  } catch (const NumericalError &e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace matrep::app
