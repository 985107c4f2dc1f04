#pragma once

#include <span>
#include <vector>

namespace matrep {

/// Highest Hermite-function degree accepted by the evaluators.
inline constexpr int kMaxHermiteDegree = 500;

/// Square-normalized Hermite function of the given degree,
/// phi_n(r) = (2^n n! sqrt(pi))^{-1/2} H_n(r) exp(-r^2/2).
///
/// Evaluated with the three-term recurrence
///   phi_{k+1} = sqrt(2/(k+1)) r phi_k - sqrt(k/(k+1)) phi_{k-1}
/// seeded by pi^{-1/4} exp(-r^2/2). The Gaussian envelope is applied through a
/// running log-scale, so the result does not underflow to zero early for |r|
/// large enough that exp(-r^2/2) alone would.
double hermite_function(int degree, double r);

/// Fills out[k] = phi_k(r) for k = 0 .. out.size()-1.
void hermite_functions(double r, std::span<double> out);
std::vector<double> hermite_functions(int max_degree, double r);

/// Same recurrence without the degree guard; quadrature construction needs
/// degrees up to the largest Gauss-Hermite order.
void hermite_recurrence(double r, std::span<double> out);

/// phi_n'(r) = sqrt(n/2) phi_{n-1}(r) - sqrt((n+1)/2) phi_{n+1}(r).
double hermite_function_derivative(int degree, double r);

/// Integral of phi_n over the real line.
double hermite_moment(int degree);

/// Taylor coefficients t_k = phi_n^{(k)}(s) / k!, k = 0 .. order, generated
/// from the oscillator equation phi'' = (r^2 - (2n+1)) phi.
std::vector<double> hermite_taylor(int degree, double s, int order);

}  // namespace matrep
