#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "matrep/basis.hpp"
#include "matrep/grid.hpp"
#include "matrep/oracle.hpp"

namespace matrep::app {

/// Malformed command-line or config input (exit code 2).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sum of `c*exp(-a r^2)` terms, optionally with bare `r^2` (quadratic part).
/// Whitespace is ignored; `c*` and `a` may be omitted (both default to 1),
/// and `a*r^2` may be written `ar^2`. Examples:
///   "1*exp(-9r^2) -1*exp(-r^2)", "10*exp(-9*r^2) - 5*exp(-r^2)", "r^2".
OraclePotential parse_potential(std::string_view text);

/// Inverse of parse_potential, printing coefficients with 17 digits.
std::string format_potential(const OraclePotential &v);

/// "rmin:rmax:step".
UniformAxis parse_grid(std::string_view text);

/// "a,b,c".
std::vector<double> parse_list(std::string_view text);

double parse_double(std::string_view text, std::string_view what);
int parse_int(std::string_view text, std::string_view what);

Family parse_family(std::string_view text);
Parity parse_parity(std::string_view text);
OrthoMethod parse_ortho(std::string_view text);
std::string_view family_name(Family f);
std::string_view parity_name(Parity p);
std::string_view ortho_name(OrthoMethod m);

}  // namespace matrep::app
