#include "matrep/hermite.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "matrep/errors.hpp"

namespace matrep {

namespace {

void check_degree(int degree) {
  if (degree < 0 || degree > kMaxHermiteDegree) {
    throw NumericalError(ErrorKind::UnsupportedDegree,
                         "Hermite degree " + std::to_string(degree) +
                             " outside [0, " +
                             std::to_string(kMaxHermiteDegree) + "]");
  }
}

const double kPiQuarterInv = std::pow(std::numbers::pi, -0.25);
constexpr double kRescale = 1e150;
const double kLogRescale = std::log(kRescale);

// cur/prev carry the polynomial part; the envelope lives in log_scale.
void fill_recurrence(double r, std::span<double> out) {
  double log_scale = -0.5 * r * r;
  double envelope = std::exp(log_scale);
  double prev = 0.0;
  double cur = kPiQuarterInv;
  out[0] = cur * envelope;
  for (std::size_t k = 0; k + 1 < out.size(); ++k) {
    const double kk = static_cast<double>(k);
    const double next = std::sqrt(2.0 / (kk + 1.0)) * r * cur -
                        std::sqrt(kk / (kk + 1.0)) * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > kRescale) {
      cur /= kRescale;
      prev /= kRescale;
      log_scale += kLogRescale;
      envelope = std::exp(log_scale);
    }
    out[k + 1] = cur * envelope;
  }
}

}  // namespace

const char *to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedDegree: return "unsupported-degree";
    case ErrorKind::InvalidSpec: return "invalid-spec";
    case ErrorKind::IllConditionedBasis: return "ill-conditioned-basis";
    case ErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ErrorKind::QuadratureFailure: return "quadrature-failure";
    case ErrorKind::ContractViolation: return "contract-violation";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::OutsideTrustRegion: return "outside-trust-region";
    case ErrorKind::DegenerateInput: return "degenerate-input";
    case ErrorKind::ResolventPole: return "resolvent-pole";
    case ErrorKind::NonConvergence: return "non-convergence";
    case ErrorKind::ResolutionInsufficient: return "resolution-insufficient";
  }
  return "unknown";
}

void hermite_functions(double r, std::span<double> out) {
  if (out.empty()) return;
  check_degree(static_cast<int>(out.size()) - 1);
  fill_recurrence(r, out);
}

std::vector<double> hermite_functions(int max_degree, double r) {
  check_degree(max_degree);
  std::vector<double> out(static_cast<std::size_t>(max_degree) + 1);
  fill_recurrence(r, out);
  return out;
}

void hermite_recurrence(double r, std::span<double> out) {
  if (!out.empty()) fill_recurrence(r, out);
}

double hermite_function(int degree, double r) {
  check_degree(degree);
  return hermite_functions(degree, r).back();
}

double hermite_function_derivative(int degree, double r) {
  check_degree(degree);
  // phi_{n+1} is needed, one past the public range when n is maximal.
  std::vector<double> phi(static_cast<std::size_t>(degree) + 2);
  fill_recurrence(r, phi);
  const double n = degree;
  const double lower = degree > 0 ? phi[degree - 1] : 0.0;
  return std::sqrt(n / 2.0) * lower -
         std::sqrt((n + 1.0) / 2.0) * phi[degree + 1];
}

double hermite_moment(int degree) {
  check_degree(degree);
  if (degree % 2 != 0) return 0.0;
  double m = std::sqrt(2.0) * std::pow(std::numbers::pi, 0.25);
  for (int n = 2; n <= degree; n += 2) {
    m *= std::sqrt(static_cast<double>(n - 1) / n);
  }
  return m;
}

std::vector<double> hermite_taylor(int degree, double s, int order) {
  std::vector<double> t(static_cast<std::size_t>(order) + 1, 0.0);
  t[0] = hermite_function(degree, s);
  if (order >= 1) t[1] = hermite_function_derivative(degree, s);
  // (k+2)(k+1) t_{k+2} = (s^2 - E) t_k + 2 s t_{k-1} + t_{k-2}
  const double shifted = s * s - (2.0 * degree + 1.0);
  for (int k = 0; k + 2 <= order; ++k) {
    double rhs = shifted * t[k];
    if (k >= 1) rhs += 2.0 * s * t[k - 1];
    if (k >= 2) rhs += t[k - 2];
    t[k + 2] = rhs / ((k + 2.0) * (k + 1.0));
  }
  return t;
}

}  // namespace matrep
