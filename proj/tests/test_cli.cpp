#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "matrep/app/acceptance.hpp"
#include "matrep/app/commands.hpp"
#include "matrep/app/config.hpp"
#include "matrep/app/csv.hpp"
#include "matrep/app/potential_parser.hpp"
#include "matrep/operators.hpp"
#include "matrep/spectral.hpp"

using namespace matrep;
using namespace matrep::app;

namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string &name) {
  const fs::path dir = fs::temp_directory_path() / "matrep_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

// Runs the installed binary so exit codes are observed as a shell would.
Outcome run_binary(const std::string &args) {
  const fs::path out = scratch("stdout.txt"), err = scratch("stderr.txt");
  const std::string cmd = std::string(MATREP_CLI_PATH) + " " + args + " >" + out.string() +
                          " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

Outcome run_inline(std::vector<std::string> args) {
  args.insert(args.begin(), "matrep");
  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

double value_of(const std::string &text, const std::string &key) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + "=", 0) == 0) return std::stod(line.substr(key.size() + 1));
  }
  ADD_FAILURE() << "no " << key << " in output:\n" << text;
  return 0.0;
}

}  // namespace

TEST(PotentialParser, GaussianSums) {
  const OraclePotential a = parse_potential("1*exp(-9r^2) -1*exp(-r^2)");
  ASSERT_EQ(a.gaussians.terms.size(), 2u);
  EXPECT_EQ(a.gaussians.terms[0].coefficient, 1.0);
  EXPECT_EQ(a.gaussians.terms[0].exponent, 9.0);
  EXPECT_EQ(a.gaussians.terms[1].coefficient, -1.0);
  EXPECT_EQ(a.gaussians.terms[1].exponent, 1.0);
  EXPECT_EQ(a.quadratic, 0.0);

  const OraclePotential b = parse_potential(" 10 * exp( -9 * r^2 ) - 5*exp(-r^2)");
  EXPECT_EQ(b.gaussians.terms[0].coefficient, 10.0);
  EXPECT_EQ(b.gaussians.terms[1].coefficient, -5.0);

  const OraclePotential c = parse_potential("-exp(-0.5r^2)");
  EXPECT_EQ(c.gaussians.terms[0].coefficient, -1.0);
  EXPECT_EQ(c.gaussians.terms[0].exponent, 0.5);

  const OraclePotential d = parse_potential("r^2");
  EXPECT_TRUE(d.gaussians.terms.empty());
  EXPECT_EQ(d.quadratic, 1.0);
  EXPECT_EQ(parse_potential("2.5e-1*r^2 + exp(-r^2)").quadratic, 0.25);
}

TEST(PotentialParser, Rejections) {
  for (const char *bad : {"", "exp(r^2)", "exp(-0r^2)", "1*exp(-r^2) 2*exp(-r^2)", "sin(r)",
                          "3*", "exp(-r^3)", "1*exp(-r^2)+", "nan*exp(-r^2)"}) {
    EXPECT_THROW(parse_potential(bad), ParseError) << bad;
  }
}

TEST(PotentialParser, FormatRoundTrip) {
  const OraclePotential v = parse_potential("0.1*exp(-0.3r^2) - 7*exp(-11r^2) + 0.7*r^2");
  const OraclePotential w = parse_potential(format_potential(v));
  ASSERT_EQ(w.gaussians.terms.size(), 2u);
  for (std::size_t k = 0; k < 2; ++k) {
    EXPECT_EQ(w.gaussians.terms[k].coefficient, v.gaussians.terms[k].coefficient);
    EXPECT_EQ(w.gaussians.terms[k].exponent, v.gaussians.terms[k].exponent);
  }
  EXPECT_EQ(w.quadratic, v.quadratic);
}

TEST(ValueParsers, GridListsAndNames) {
  const UniformAxis g = parse_grid("-2:3:0.5");
  EXPECT_EQ(g.min, -2.0);
  EXPECT_EQ(g.max, 3.0);
  EXPECT_EQ(g.size(), 11u);
  EXPECT_THROW(parse_grid("1:0:0.1"), ParseError);
  EXPECT_THROW(parse_grid("0:1"), ParseError);
  EXPECT_THROW(parse_grid("0:1:0"), ParseError);
  EXPECT_EQ(parse_list("0,1.5,-2"), (std::vector<double>{0.0, 1.5, -2.0}));
  EXPECT_THROW(parse_list("0,,1"), ParseError);
  EXPECT_EQ(parse_family("pairs"), Family::SymmetricPairs);
  EXPECT_EQ(parse_ortho("gs"), OrthoMethod::GramSchmidt);
  EXPECT_EQ(parse_parity("Even"), Parity::Even);
  EXPECT_THROW(parse_family("legendre"), ParseError);
  EXPECT_THROW(parse_int("3.5", "n"), ParseError);
  EXPECT_THROW(parse_double("inf", "beta"), ParseError);
}

TEST(Config, FileSyntax) {
  const Settings s = parse_config_text("# comment\nbasis = pairs\n\n n=25 \npotential = 1*exp(-9r^2) -1*exp(-r^2)\n");
  EXPECT_EQ(s.at("basis"), "pairs");
  EXPECT_EQ(s.at("n"), "25");
  EXPECT_EQ(s.at("potential"), "1*exp(-9r^2) -1*exp(-r^2)");
  EXPECT_THROW(parse_config_text("colour = red\n"), ParseError);
  EXPECT_THROW(parse_config_text("just words\n"), ParseError);
  EXPECT_THROW(read_config_file(scratch("does_not_exist.cfg")), IoError);
}

TEST(Config, PrecedenceMatrix) {
  // Each key is set by any subset of {file, flags}; the flag wins, then the file.
  const ExperimentConfig defaults;
  for (int mask = 0; mask < 4; ++mask) {
    Settings file, flags;
    if (mask & 1) file = {{"n", "12"}, {"beta", "0.7"}, {"basis", "shifted"}, {"n1", "3"}};
    if (mask & 2) flags = {{"n", "20"}, {"beta", "0.9"}, {"basis", "pairs"}, {"n1", "4"}};
    const ExperimentConfig c = resolve(file, flags);
    const int expected_n = mask & 2 ? 20 : mask & 1 ? 12 : defaults.basis.n;
    const double expected_beta = mask & 2 ? 0.9 : mask & 1 ? 0.7 : defaults.basis.beta;
    const Family expected_family = mask & 2   ? Family::SymmetricPairs
                                   : mask & 1 ? Family::ShiftedGaussians
                                              : defaults.basis.family;
    const int expected_n1 = mask & 2 ? 4 : mask & 1 ? 3 : defaults.n1;
    EXPECT_EQ(c.basis.n, expected_n) << mask;
    EXPECT_EQ(c.basis.beta, expected_beta) << mask;
    EXPECT_EQ(c.basis.family, expected_family) << mask;
    EXPECT_EQ(c.n1, expected_n1) << mask;
    // Untouched fields keep their defaults.
    EXPECT_EQ(c.basis.sigma, defaults.basis.sigma);
    EXPECT_EQ(c.n2, defaults.n2);
  }
  // Keys given only in the file survive a flag set that omits them.
  const ExperimentConfig mixed = resolve({{"sigma", "0.5"}, {"n", "8"}}, {{"n", "10"}});
  EXPECT_EQ(mixed.basis.sigma, 0.5);
  EXPECT_EQ(mixed.basis.n, 10);
}

TEST(Config, PrecedenceThroughTheCommandLine) {
  const fs::path cfg = scratch("precedence.cfg");
  std::ofstream(cfg) << "basis = ho\nn = 40\npotential = 1*exp(-9r^2) -1*exp(-r^2)\n";
  const Outcome file_only = run_inline({"eigen", "--config", cfg.string(), "--out", scratch("p1.txt").string()});
  const Outcome flag_wins = run_inline(
      {"eigen", "--config", cfg.string(), "--n", "50", "--out", scratch("p2.txt").string()});
  ASSERT_EQ(file_only.code, 0) << file_only.err;
  ASSERT_EQ(flag_wins.code, 0) << flag_wins.err;
  const BasisSet h40({Family::HarmonicOscillator, 40});
  const PotentialSpec v{{{1.0, 9.0}, {-1.0, 1.0}}};
  EXPECT_EQ(value_of(file_only.out, "ground"), eigen_symmetric(hamiltonian_matrix(h40, v)).ground());
  EXPECT_NEAR(value_of(flag_wins.out, "ground"), -0.171874, 5e-6);
}

TEST(Csv, GridRoundTripIsBitExact) {
  const BasisSet set({Family::HarmonicOscillator, 12});
  const UniformAxis axis(-3.0, 2.0, 0.1);
  const KernelGrid g = render_kernel(set, kinetic_matrix(set), axis, axis);
  std::stringstream buf;
  write_grid(buf, g);
  const KernelGrid back = read_grid(buf);
  EXPECT_EQ(back.values, g.values);
  EXPECT_EQ(back.r_axis.size(), axis.size());
  EXPECT_NEAR(back.r_axis.step, axis.step, 1e-15);
  EXPECT_NEAR(back.s_axis.min, axis.min, 1e-15);
}

TEST(Csv, CurveCutsAndSpectrumRoundTrip) {
  const BasisSet set({Family::SymmetricPairs, 9, 0.5, 0.5});
  const CurveSeries w = weight_curve(set, UniformAxis::symmetric(4.0, 0.013));
  std::stringstream buf;
  write_curve(buf, w);
  const CurveSeries wb = read_curve(buf);
  EXPECT_EQ(wb.x, w.x);
  EXPECT_EQ(wb.y, w.y);

  const UniformAxis axis = default_kernel_axis(9);
  const auto cuts = crest_and_cuts(render_identity_kernel(set, axis, axis), {-1.0, 0.5}).cuts;
  std::stringstream cbuf;
  write_cuts(cbuf, cuts);
  const auto back = read_cuts(cbuf);
  ASSERT_EQ(back.size(), 2u);
  for (std::size_t k = 0; k < 2; ++k) {
    EXPECT_EQ(back[k].position, cuts[k].position);
    EXPECT_EQ(back[k].x, cuts[k].x);
    EXPECT_EQ(back[k].y, cuts[k].y);
  }

  const Spectrum sp = eigen_symmetric(hamiltonian_matrix(set, PotentialSpec{{{-1.0, 1.0}}}));
  std::stringstream sbuf;
  write_spectrum(sbuf, sp);
  const Spectrum sb = read_spectrum(sbuf);
  EXPECT_EQ(sb.eigenvalues, sp.eigenvalues);
  EXPECT_EQ(sb.vectors, sp.vectors);
}

TEST(Csv, SeventeenDigits) {
  for (double x : {0.1, 1.0 / 3.0, -2.2250738585072014e-308, 6.02214076e23}) {
    EXPECT_EQ(std::stod(format_number(x)), x);
  }
  std::stringstream bad("r,s,value\n0,0,1\n0,1\n");
  EXPECT_THROW(read_grid(bad), ParseError);
}

TEST(Cli, ReferenceRuns) {
  const Outcome e = run_inline({"eigen", "--basis", "ho", "--n", "100", "--parity", "even", "--potential",
                            "1*exp(-9r^2) -1*exp(-r^2)", "--out", scratch("eigen.txt").string()});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_NEAR(value_of(e.out, "ground"), -0.172071, 5e-6);

  const Outcome f = run_inline({"feshbach", "--n1", "5", "--n2", "26", "--potential",
                            "10*exp(-9r^2) -5*exp(-r^2)"});
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_NEAR(value_of(f.out, "energy"), -0.7342, 1e-4);
  EXPECT_NEAR(value_of(f.out, "php_ground"), -0.6897, 1e-4);

  const Outcome k = run_inline({"kernel", "--basis", "ho", "--n", "50", "--operator", "identity",
                            "--out", scratch("kernel.csv").string()});
  ASSERT_EQ(k.code, 0) << k.err;
  std::ifstream in(scratch("kernel.csv"));
  const KernelGrid g = read_grid(in);
  const std::size_t mid = g.r_axis.nearest(0.0);
  EXPECT_NEAR(g.values(static_cast<Eigen::Index>(mid), static_cast<Eigen::Index>(mid)),
              identity_kernel(BasisSet({Family::HarmonicOscillator, 50}), 0.0, 0.0), 1e-15);
}

TEST(Cli, OutputsAreDeterministic) {
  const std::vector<std::string> args = {"cuts", "--basis", "pairs", "--n", "10", "--beta", "0.5",
                                         "--sigma", "0.5", "--operator", "kinetic", "--s-values",
                                         "0,1.5"};
  auto a = args, b = args;
  a.insert(a.end(), {"--out", scratch("det_a.csv").string()});
  b.insert(b.end(), {"--out", scratch("det_b.csv").string()});
  ASSERT_EQ(run_inline(a).code, 0);
  ASSERT_EQ(run_inline(b).code, 0);
  EXPECT_EQ(slurp(scratch("det_a.csv")), slurp(scratch("det_b.csv")));
  EXPECT_FALSE(slurp(scratch("det_a.csv")).empty());
}

TEST(Cli, EveryCommandRuns) {
  const std::vector<std::vector<std::string>> runs = {
      {"crest", "--n", "20"},
      {"weight", "--n", "20", "--operator", "kinetic"},
      {"crest-ratio", "--n", "20", "--potential", "-1*exp(-r^2)"},
      {"flat-wave", "--n", "20"},
      {"r2-local", "--n", "20"},
      {"kernel", "--n", "10", "--operator", "separable", "--potential", "exp(-r^2)", "--grid", "-2:2:0.5"},
      {"oracle", "--potential", "r^2", "--half-width", "12", "--npoints", "2000"},
  };
  for (const auto &r : runs) {
    const Outcome res = run_inline(r);
    EXPECT_EQ(res.code, 0) << r[0] << ": " << res.err;
    EXPECT_FALSE(res.out.empty()) << r[0];
  }
}

TEST(Cli, ExitCodes) {
  const Outcome missing_oracle = run_binary("oracle --potential '10*exp(-9r^2) -5*exp(-r^2)' --npoints 500");
  EXPECT_EQ(missing_oracle.code, 3);
  EXPECT_NE(missing_oracle.err.find("resolution-insufficient"), std::string::npos);

  const Outcome bad_potential = run_binary("eigen --potential 'sin(r)'");
  EXPECT_EQ(bad_potential.code, 2);
  const Outcome unknown_flag = run_binary("kernel --colour red");
  EXPECT_EQ(unknown_flag.code, 2);
  const Outcome no_command = run_binary("");
  EXPECT_EQ(no_command.code, 2);
  const Outcome needs_potential = run_binary("kernel --operator potential");
  EXPECT_EQ(needs_potential.code, 2);
  const Outcome bad_spec = run_binary("kernel --basis shifted --n 5");
  EXPECT_EQ(bad_spec.code, 3);
  const Outcome off_grid = run_binary("cuts --n 10 --s-values 100");
  EXPECT_EQ(off_grid.code, 3);
  const Outcome unwritable = run_binary("kernel --n 4 --out /nonexistent_dir/k.csv");
  EXPECT_EQ(unwritable.code, 4);
  const Outcome no_config = run_binary("kernel --config /nonexistent_dir/c.cfg");
  EXPECT_EQ(no_config.code, 4);

  for (const Outcome *r : {&missing_oracle, &bad_potential, &unknown_flag, &bad_spec, &unwritable}) {
    EXPECT_EQ(std::count(r->err.begin(), r->err.end(), '\n'), 1) << r->err;
  }
  EXPECT_EQ(run_binary("--help").code, 0);
}

TEST(Acceptance, FaultInjectionBreaksPositionSquaredCriterion) {
  const auto results = run_acceptance({1e-3});
  EXPECT_FALSE(all_passed(results));
  for (const auto &r : results) {
    if (r.id == 7) {
      EXPECT_FALSE(r.pass) << r.measured;
    } else {
      EXPECT_TRUE(r.pass) << r.id << ": " << r.measured;
    }
  }
  std::ostringstream report;
  print_report(report, results);
  EXPECT_NE(report.str().find("failing criteria: 7"), std::string::npos);
}

TEST(Acceptance, BinaryExitStatus) {
  const Outcome broken = run_binary("accept --perturb-r2 1e-3");
  EXPECT_EQ(broken.code, 1);
  EXPECT_NE(broken.out.find("FAIL  [7]"), std::string::npos);
}
