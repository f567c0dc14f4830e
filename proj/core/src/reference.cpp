#include "wlab/reference.hpp"

#include <algorithm>
#include <cmath>

#include "wlab/error.hpp"

namespace wlab {

namespace {

void require_unit(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(Errc::invalid_argument, "interval points must lie in [0,1]");
}

}  // namespace

GasketConstants gasket_constants() {
  GasketConstants g;
  g.beta_sg = std::log(5.0 / 3.0) / std::log(2.0);
  g.d_sg = std::log(3.0) / std::log(5.0 / 3.0);
  return g;
}

double interval_resistance(double x, double y) {
  require_unit(x);
  require_unit(y);
  return std::abs(y - x);
}

double interval_discrete_energy(double x, double y, int p, IntervalWeight weight) {
  require_unit(x);
  require_unit(y);
  if (p < 0 || p > 52) throw Error(Errc::invalid_argument, "dyadic level must lie in [0,52]");
  if (x == y) throw Error(Errc::invalid_argument, "energy minimizer undefined for x == y");
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  const double cells = std::ldexp(1.0, p);
  const double span = hi - lo;
  // Grid points strictly inside (lo, hi), then the two end points.
  double sum = 0.0;
  double prev = lo;
  for (double j = std::floor(lo * cells) + 1.0; j / cells < hi; j += 1.0) {
    const double t = j / cells;
    const double d = (t - prev) / span;
    sum += d * d;
    prev = t;
  }
  const double d = (hi - prev) / span;
  sum += d * d;
  return (weight == IntervalWeight::growing ? cells : 1.0 / cells) * sum;
}

std::vector<IntervalEnergyRow> interval_energy_table(double x, double y, int p_max,
                                                     IntervalWeight weight) {
  std::vector<IntervalEnergyRow> rows;
  const double target = 1.0 / interval_resistance(x, y);
  for (int p = 0; p <= p_max; ++p) {
    const double e = interval_discrete_energy(x, y, p, weight);
    rows.push_back({p, e, e - target});
  }
  return rows;
}

}  // namespace wlab
