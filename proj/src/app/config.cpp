#include "matrep/app/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace matrep::app {

namespace {

std::string trim(const std::string &s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

OperatorChoice parse_operator(std::string_view text) {
  if (text == "identity") return OperatorChoice::Identity;
  if (text == "kinetic") return OperatorChoice::Kinetic;
  if (text == "r2") return OperatorChoice::R2;
  if (text == "potential") return OperatorChoice::Potential;
  if (text == "hamiltonian") return OperatorChoice::Hamiltonian;
  if (text == "separable") return OperatorChoice::Separable;
  throw ParseError("operator: expected identity, kinetic, r2, potential, hamiltonian or "
                   "separable, got '" + std::string(text) + "'");
}

std::string_view operator_name(OperatorChoice op) {
  switch (op) {
    case OperatorChoice::Identity: return "identity";
    case OperatorChoice::Kinetic: return "kinetic";
    case OperatorChoice::R2: return "r2";
    case OperatorChoice::Potential: return "potential";
    case OperatorChoice::Hamiltonian: return "hamiltonian";
    case OperatorChoice::Separable: return "separable";
  }
  return "?";
}

const std::vector<std::string> &known_keys() {
  static const std::vector<std::string> keys = {
      "basis", "n",  "beta", "sigma", "parity", "ortho",      "operator", "potential",
      "grid",  "s-values", "n1", "n2", "out", "half-width", "npoints"};
  return keys;
}

Settings parse_config_text(const std::string &text) {
  Settings out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ParseError("config line " + std::to_string(number) + ": expected key = value");
    }
    const std::string key = trim(body.substr(0, eq));
    const auto &keys = known_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ParseError("config line " + std::to_string(number) + ": unknown key '" + key + "'");
    }
    out[key] = trim(body.substr(eq + 1));
  }
  return out;
}

Settings read_config_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

ExperimentConfig resolve(const Settings &file, const Settings &flags,
                         const ExperimentConfig &defaults) {
  Settings merged = file;
  for (const auto &[k, v] : flags) merged[k] = v;

  ExperimentConfig c = defaults;
  for (const auto &[key, value] : merged) {
    if (key == "basis") {
      c.basis.family = parse_family(value);
    } else if (key == "n") {
      c.basis.n = parse_int(value, "n");
    } else if (key == "beta") {
      c.basis.beta = parse_double(value, "beta");
    } else if (key == "sigma") {
      c.basis.sigma = parse_double(value, "sigma");
    } else if (key == "parity") {
      c.basis.parity = parse_parity(value);
    } else if (key == "ortho") {
      c.basis.ortho = parse_ortho(value);
    } else if (key == "operator") {
      c.op = parse_operator(value);
    } else if (key == "potential") {
      c.potential = parse_potential(value);
    } else if (key == "grid") {
      c.grid = parse_grid(value);
    } else if (key == "s-values") {
      c.s_values = parse_list(value);
    } else if (key == "n1") {
      c.n1 = parse_int(value, "n1");
    } else if (key == "n2") {
      c.n2 = parse_int(value, "n2");
    } else if (key == "out") {
      c.out = value;
    } else if (key == "half-width") {
      c.half_width = parse_double(value, "half-width");
    } else if (key == "npoints") {
      c.npoints = parse_int(value, "npoints");
    } else {
      throw ParseError("unknown setting '" + key + "'");
    }
  }
  return c;
}

}  // namespace matrep::app
