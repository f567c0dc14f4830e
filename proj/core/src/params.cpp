#include "wlab/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "wlab/error.hpp"

namespace wlab {

namespace {

double box_exponent(double lambda, int nb) { return 2.0 + std::log(lambda) / std::log(nb); }

}  // namespace

double eta_constant(double lambda, int nb) {
  const double b = nb;
  const double d_w = box_exponent(lambda, nb);
  const double first = (2.0 * b - 1.0) * lambda * (b * b - 1.0) /
                       ((b - 1.0) * (b - 1.0) * (1.0 - lambda) * (lambda * b * b - 1.0));
  const double second = 2.0 * b / ((lambda * b * b - 1.0) * (lambda * b * b * b - 1.0));
  return 2.0 * std::numbers::pi * std::numbers::pi * std::pow(b - 1.0, 2.0 - d_w) *
         (first + second);
}

double lower_bound_constant(double lambda, int nb) {
  const double b = nb;
  double min_sin = std::numeric_limits<double>::infinity();
  for (int j = 0; j <= nb - 1; ++j) {
    min_sin = std::min(min_sin, std::sin(std::numbers::pi * (2.0 * j + 1.0) / (b - 1.0)));
  }
  const double tail = std::numbers::pi / (b * (b - 1.0) * (lambda * b - 1.0));
  return std::abs(2.0 / (1.0 - lambda) * min_sin - tail);
}

double column_width(int nb, int m) {
  return 1.0 / ((nb - 1.0) * std::pow(static_cast<double>(nb), m));
}

WeierstrassParams make_params(double lambda, int nb, bool strict) {
  if (!std::isfinite(lambda) || lambda <= 0.0 || lambda >= 1.0) {
    throw Error(Errc::invalid_argument, "lambda must lie in (0,1)");
  }
  if (nb < 2) {
    throw Error(Errc::invalid_argument, "nb must be >= 2");
  }
  if (strict && lambda * nb <= 1.0) {
    throw Error(Errc::constraint, "lambda*nb <= 1");
  }
  if (lambda * nb * nb <= 1.0) {
    throw Error(Errc::constraint, "lambda*nb^2 <= 1 (height constant undefined)");
  }
  WeierstrassParams p;
  p.lambda = lambda;
  p.nb = nb;
  p.strict = strict;
  p.d_w = box_exponent(lambda, nb);
  p.eta = eta_constant(lambda, nb);
  if (!std::isfinite(p.eta) || p.eta <= 0.0) {
    throw Error(Errc::constraint, "height constant is not positive");
  }
  return p;
}

std::size_t checked_pow(int nb, int m) {
  if (m < 0) throw Error(Errc::invalid_argument, "level must be >= 0");
  std::size_t out = 1;
  for (int k = 0; k < m; ++k) {
    if (out > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(nb)) {
      throw Error(Errc::size_limit, "nb^m overflows");
    }
    out *= static_cast<std::size_t>(nb);
  }
  return out;
}

}  // namespace wlab
