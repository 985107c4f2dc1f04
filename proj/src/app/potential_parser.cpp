#include "matrep/app/potential_parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace matrep::app {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string text) : text_(std::move(text)) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  bool accept(std::string_view token) {
    if (text_.compare(pos_, token.size(), token) != 0) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  bool number(double &out) {
    const char *begin = text_.data() + pos_;
    const char *end = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc() || ptr == begin) return false;
    pos_ += static_cast<std::size_t>(ptr - begin);
    return true;
  }

  [[noreturn]] void fail(const std::string &why) const {
    throw ParseError("potential: " + why + " at offset " + std::to_string(pos_));
  }

 private:
  std::string text_;
  std::size_t pos_ = 0;
};

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string g17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

OraclePotential parse_potential(std::string_view text) {
  Scanner sc(strip_spaces(text));
  if (sc.done()) throw ParseError("potential: empty expression");
  OraclePotential v;
  bool first = true;
  while (!sc.done()) {
    double sign = 1.0;
    if (sc.accept("+")) {
    } else if (sc.accept("-")) {
      sign = -1.0;
    } else if (!first) {
      sc.fail("expected '+' or '-'");
    }
    first = false;

    double coefficient = 1.0;
    if (sc.number(coefficient) && !sc.accept("*")) {
      // "2r^2" is allowed for the quadratic term only.
      if (sc.peek() != 'r') sc.fail("expected '*'");
    }
    if (!std::isfinite(coefficient)) sc.fail("non-finite coefficient");
    coefficient *= sign;

    if (sc.accept("exp(-")) {
      double exponent = 1.0;
      if (sc.number(exponent)) sc.accept("*");
      sc.expect("r^2)");
      if (!(exponent > 0.0) || !std::isfinite(exponent)) sc.fail("exponent must be positive");
      v.gaussians.terms.push_back({coefficient, exponent});
    } else if (sc.accept("r^2")) {
      v.quadratic += coefficient;
    } else {
      sc.fail("expected 'exp(-a r^2)' or 'r^2'");
    }
  }
  return v;
}

std::string format_potential(const OraclePotential &v) {
  std::string out;
  for (const auto &t : v.gaussians.terms) {
    if (!out.empty()) out += " + ";
    out += g17(t.coefficient) + "*exp(-" + g17(t.exponent) + "*r^2)";
  }
  if (v.quadratic != 0.0) {
    if (!out.empty()) out += " + ";
    out += g17(v.quadratic) + "*r^2";
  }
  return out;
}

double parse_double(std::string_view text, std::string_view what) {
  const std::string s = strip_spaces(text);
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(out)) {
    throw ParseError(std::string(what) + ": not a finite number: '" + std::string(text) + "'");
  }
  return out;
}

int parse_int(std::string_view text, std::string_view what) {
  const std::string s = strip_spaces(text);
  int out = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(std::string(what) + ": not an integer: '" + std::string(text) + "'");
  }
  return out;
}

UniformAxis parse_grid(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ':') {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 3) throw ParseError("grid: expected rmin:rmax:step");
  const double lo = parse_double(parts[0], "grid rmin");
  const double hi = parse_double(parts[1], "grid rmax");
  const double h = parse_double(parts[2], "grid step");
  if (!(h > 0.0) || hi < lo) throw ParseError("grid: need rmin <= rmax and step > 0");
  return UniformAxis(lo, hi, h);
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      out.push_back(parse_double(text.substr(start, i - start), "list entry"));
      start = i + 1;
    }
  }
  return out;
}

Family parse_family(std::string_view text) {
  const std::string s = lower(text);
  if (s == "ho") return Family::HarmonicOscillator;
  if (s == "shifted") return Family::ShiftedGaussians;
  if (s == "centered") return Family::CenteredGaussians;
  if (s == "pairs") return Family::SymmetricPairs;
  throw ParseError("basis: expected ho, shifted, centered or pairs, got '" + s + "'");
}

Parity parse_parity(std::string_view text) {
  const std::string s = lower(text);
  if (s == "even") return Parity::Even;
  if (s == "odd") return Parity::Odd;
  if (s == "both") return Parity::Both;
  throw ParseError("parity: expected even, odd or both, got '" + s + "'");
}

OrthoMethod parse_ortho(std::string_view text) {
  const std::string s = lower(text);
  if (s == "lowdin") return OrthoMethod::Lowdin;
  if (s == "gs") return OrthoMethod::GramSchmidt;
  throw ParseError("ortho: expected lowdin or gs, got '" + s + "'");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::HarmonicOscillator: return "ho";
    case Family::ShiftedGaussians: return "shifted";
    case Family::CenteredGaussians: return "centered";
    case Family::SymmetricPairs: return "pairs";
  }
  return "?";
}

std::string_view parity_name(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::Both: return "both";
  }
  return "?";
}

std::string_view ortho_name(OrthoMethod m) {
  return m == OrthoMethod::Lowdin ? "lowdin" : "gs";
}

}  // namespace matrep::app
