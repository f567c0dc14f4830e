#include "wlab/tridiagonal.hpp"

#include <cmath>
#include <string>

#include "wlab/error.hpp"

namespace wlab {

std::vector<double> solve_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                                      std::span<const double> upper, std::span<const double> rhs,
                                      double pivot_tolerance) {
  const std::size_t n = diag.size();
  if (rhs.size() != n || (n > 0 && (lower.size() != n - 1 || upper.size() != n - 1))) {
    throw Error(Errc::invalid_argument, "tridiagonal system has inconsistent band sizes");
  }
  if (n == 0) return {};
  std::vector<double> c(n, 0.0);
  std::vector<double> d(n, 0.0);
  double pivot = diag[0];
  if (std::abs(pivot) < pivot_tolerance) throw Error(Errc::singular, "zero pivot in row 0");
  if (n > 1) c[0] = upper[0] / pivot;
  d[0] = rhs[0] / pivot;
  for (std::size_t k = 1; k < n; ++k) {
    pivot = diag[k] - lower[k - 1] * c[k - 1];
    if (std::abs(pivot) < pivot_tolerance) {
      throw Error(Errc::singular, "zero pivot in row " + std::to_string(k));
    }
    if (k + 1 < n) c[k] = upper[k] / pivot;
    d[k] = (rhs[k] - lower[k - 1] * d[k - 1]) / pivot;
  }
  std::vector<double> x(n);
  x[n - 1] = d[n - 1];
  for (std::size_t k = n - 1; k-- > 0;) x[k] = d[k] - c[k] * x[k + 1];
  return x;
}

double path_determinant(int n, double diagonal) {
  double prev = 1.0;  // D_0
  double cur = diagonal;
  if (n <= 0) return prev;
  for (int k = 2; k <= n; ++k) {
    const double next = diagonal * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace wlab
