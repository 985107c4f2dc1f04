#pragma once

#include <functional>
#include <vector>

namespace matrep {

class BasisSet;

enum class QuadratureScheme { GaussHermite, Trapezoid };

/// Discrete integration rule.
///
/// For Gauss-Hermite rules `weights` integrate exp(-r^2) f(r); `plain_weights`
/// (= weights * exp(r^2), computed without overflow) integrate f(r) itself.
/// For trapezoid rules both are the same.
struct QuadratureRule {
  QuadratureScheme scheme = QuadratureScheme::Trapezoid;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> plain_weights;
  int order = 0;
  double half_width = 0.0;
  double step = 0.0;

  std::size_t size() const { return nodes.size(); }

  /// Integral of f over the real line (Gauss-Hermite) or [-L, L] (trapezoid).
  double integrate(const std::function<double(double)> &f) const;

  /// Same scheme at doubled resolution. Gauss-Hermite orders are capped at
  /// kMaxGaussHermiteOrder.
  QuadratureRule refined() const;
};

inline constexpr int kMaxGaussHermiteOrder = 600;

/// Gauss-Hermite rule of order m (Golub-Welsch nodes polished by Newton steps).
QuadratureRule gauss_hermite_rule(int m);

/// Composite trapezoid rule on [-half_width, half_width]; the step is shrunk
/// slightly so the end points are nodes.
QuadratureRule trapezoid_rule(double half_width, double step);

/// Gauss-Hermite of order max(2 d + 22, 64) for oscillator bases (d the top
/// degree); trapezoid with step 0.01 on a window covering every Gaussian for
/// the others.
QuadratureRule default_rule(const BasisSet &basis);

}  // namespace matrep
