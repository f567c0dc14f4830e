#pragma once

#include <cstddef>

namespace wlab {

/// Parameters of the 1-periodic Weierstrass function sum_n lambda^n cos(2 pi nb^n x)
/// together with the constants derived from them.
struct WeierstrassParams {
  double lambda = 0.5;
  int nb = 3;
  double d_w = 0.0;  // 2 + ln(lambda)/ln(nb)
  double eta = 0.0;  // edge-height constant
  bool strict = true;
};

/// Builds validated parameters. In strict mode lambda*nb > 1 is required
/// (the graph is then non-rectifiable); relaxed mode only asks for the
/// height constant to stay finite and positive, i.e. lambda*nb^2 > 1.
WeierstrassParams make_params(double lambda, int nb, bool strict = true);

/// Closed-form height constant eta_{2-D_W}.
double eta_constant(double lambda, int nb);

/// |2/(1-lambda) min_j sin(pi(2j+1)/(nb-1)) - pi/(nb(nb-1)(lambda nb - 1))|,
/// the factor multiplying lambda^m in the edge-height lower estimate.
/// The bracket is evaluated verbatim, so it is reported but never used as a
/// per-edge guarantee.
double lower_bound_constant(double lambda, int nb);

/// Column width L_m = 1/((nb-1) nb^m).
double column_width(int nb, int m);

/// Resource caps shared by the level-indexed constructions.
struct Budget {
  std::size_t max_vertices = std::size_t{1} << 24;
  int max_eigen_level = 7;
};

/// nb^m with overflow detection; throws Errc::size_limit.
std::size_t checked_pow(int nb, int m);

}  // namespace wlab
