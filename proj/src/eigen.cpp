#include "matrep/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "matrep/errors.hpp"

namespace matrep {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const Eigen::MatrixXd &a) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) sum += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sum);
}

Eigen::Index leading_index(const Eigen::VectorXd &v) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i) {
    // Strictly greater keeps the first index among ties.
    if (std::abs(v(i)) > std::abs(v(best)) * (1.0 + 1e-12)) best = i;
  }
  return best;
}

}  // namespace

Spectrum eigen_symmetric(const Eigen::MatrixXd &matrix) {
  const Eigen::Index n = matrix.rows();
  if (matrix.cols() != n) {
    throw NumericalError(ErrorKind::ContractViolation, "matrix is not square");
  }
  const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  if ((matrix - matrix.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw NumericalError(ErrorKind::ContractViolation,
                         "matrix is not symmetric");
  }

  Eigen::MatrixXd a = 0.5 * (matrix + matrix.transpose());
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double threshold = 1e-13 * a.norm();

  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (++sweep > kMaxSweeps) {
      throw NumericalError(ErrorKind::NonConvergence,
                           "Jacobi sweeps exceeded " +
                               std::to_string(kMaxSweeps));
    }
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  for (Eigen::Index k = 0; k < n; ++k) {
    v.col(k).normalize();
    const Eigen::Index lead = leading_index(v.col(k));
    if (v(lead, k) < 0.0) v.col(k) = -v.col(k);
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return a(x, x) < a(y, y); });
  // Re-order degenerate clusters by leading component index.
  const double cluster_tol = 1e-12 * scale;
  for (std::size_t begin = 0; begin < order.size();) {
    std::size_t end = begin + 1;
    while (end < order.size() &&
           a(order[end], order[end]) - a(order[end - 1], order[end - 1]) <
               cluster_tol) {
      ++end;
    }
    if (end - begin > 1) {
      std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(begin),
                       order.begin() + static_cast<std::ptrdiff_t>(end),
                       [&](Eigen::Index x, Eigen::Index y) {
                         return leading_index(v.col(x)) < leading_index(v.col(y));
                       });
    }
    begin = end;
  }

  Spectrum out;
  out.eigenvalues.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues(k) = a(order[k], order[k]);
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

double condition_number(const Eigen::VectorXd &ascending_eigenvalues) {
  const double lo = ascending_eigenvalues(0);
  const double hi = ascending_eigenvalues(ascending_eigenvalues.size() - 1);
  if (lo <= 0.0) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

std::vector<double> tridiagonal_eigenvalues(std::span<const double> diag,
                                            std::span<const double> off) {
  const std::size_t n = diag.size();
  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> e(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = off[i];

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (++iter > 60) {
          throw NumericalError(ErrorKind::NonConvergence,
                               "tridiagonal QL did not converge");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
        double s = 1.0, c = 1.0, p = 0.0;
        std::size_t i = m;
        bool underflow = false;
        while (i-- > l) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

namespace {

// Number of eigenvalues strictly below x.
std::size_t sturm_count(std::span<const double> diag,
                        std::span<const double> off, double x) {
  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const double coupling = i == 0 ? 0.0 : off[i - 1] * off[i - 1];
    q = diag[i] - x - (i == 0 ? 0.0 : coupling / q);
    if (q == 0.0) q = -1e-300;
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace

double tridiagonal_lowest(std::span<const double> diag,
                          std::span<const double> off) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const double radius = (i > 0 ? std::abs(off[i - 1]) : 0.0) +
                          (i + 1 < diag.size() ? std::abs(off[i]) : 0.0);
    lo = std::min(lo, diag[i] - radius);
    hi = std::max(hi, diag[i] + radius);
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (sturm_count(diag, off, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> tridiagonal_lowest_vector(std::span<const double> diag,
                                              std::span<const double> off,
                                              double lambda) {
  const std::size_t n = diag.size();
  // Shifting just below the lowest eigenvalue keeps T - shift positive
  // definite, so the unpivoted Thomas sweep is stable.
  const double shift = lambda - 1e-10 * std::max(1.0, std::abs(lambda));
  std::vector<double> x(n, 1.0);
  std::vector<double> cp(n), dp(n);
  for (int iter = 0; iter < 4; ++iter) {
    double denom = diag[0] - shift;
    cp[0] = n > 1 ? off[0] / denom : 0.0;
    dp[0] = x[0] / denom;
    for (std::size_t i = 1; i < n; ++i) {
      denom = diag[i] - shift - off[i - 1] * cp[i - 1];
      cp[i] = i + 1 < n ? off[i] / denom : 0.0;
      dp[i] = (x[i] - off[i - 1] * dp[i - 1]) / denom;
    }
    x[n - 1] = dp[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = dp[i] - cp[i] * x[i + 1];
    double norm = 0.0;
    for (double value : x) norm += value * value;
    norm = std::sqrt(norm);
    for (double &value : x) value /= norm;
  }
  const auto lead = std::max_element(x.begin(), x.end(), [](double p, double q) {
    return std::abs(p) < std::abs(q);
  });
  if (*lead < 0.0) {
    for (double &value : x) value = -value;
  }
  return x;
}

}  // namespace matrep
