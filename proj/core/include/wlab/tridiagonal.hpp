#pragma once

#include <span>
#include <vector>

namespace wlab {

/// Solves a tridiagonal system by the Thomas algorithm.
/// `lower[k]` couples row k+1 to row k, `upper[k]` couples row k to row k+1.
/// Throws Errc::singular when a pivot magnitude drops below `pivot_tolerance`.
std::vector<double> solve_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                                      std::span<const double> upper, std::span<const double> rhs,
                                      double pivot_tolerance = 1e-14);

/// Determinant of the n x n matrix with `diagonal` on the diagonal and -1 on
/// both off-diagonals, by the three-term recurrence.
double path_determinant(int n, double diagonal);

}  // namespace wlab
