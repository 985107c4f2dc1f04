#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrep/app/potential_parser.hpp"
#include "matrep/basis.hpp"
#include "matrep/grid.hpp"
#include "matrep/oracle.hpp"

namespace matrep::app {

/// File could not be read or written (exit code 4).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OperatorChoice { Identity, Kinetic, R2, Potential, Hamiltonian, Separable };

OperatorChoice parse_operator(std::string_view text);
std::string_view operator_name(OperatorChoice op);

/// Raw key -> value settings, keys named like the long flags without dashes
/// ("basis", "n", "s-values", ...).
using Settings = std::map<std::string, std::string>;

/// Every key accepted in a config file or as a flag.
const std::vector<std::string> &known_keys();

/// Flat `key = value` file; blank lines and lines starting with '#' are
/// skipped. Unknown keys and lines without '=' are parse errors.
Settings read_config_file(const std::filesystem::path &path);
Settings parse_config_text(const std::string &text);

struct ExperimentConfig {
  BasisSpec basis{Family::HarmonicOscillator, 50};
  std::optional<OraclePotential> potential;
  std::optional<OperatorChoice> op;
  std::optional<UniformAxis> grid;
  std::vector<double> s_values{0.0};
  int n1 = 5;
  int n2 = 26;
  std::optional<std::string> out;
  double half_width = kOracleHalfWidth;
  int npoints = kOraclePoints;
};

/// Merge with precedence flags > file > defaults. `defaults` lets a command
/// supply its own starting point (feshbach uses an even oscillator basis of
/// n2 states).
ExperimentConfig resolve(const Settings &file, const Settings &flags,
                         const ExperimentConfig &defaults = {});

}  // namespace matrep::app
