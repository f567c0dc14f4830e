#pragma once

#include <vector>

namespace wlab {

/// Sierpinski gasket anchors: energy renormalization 3/5, the resistance
/// scaling exponent and the resistance-metric dimension.
struct GasketConstants {
  double r_sg = 3.0 / 5.0;
  double beta_sg = 0.0;  // ln(5/3)/ln 2
  double d_sg = 0.0;     // ln 3/ln(5/3)
};

GasketConstants gasket_constants();

/// Effective resistance |y - x| on the unit interval.
double interval_resistance(double x, double y);

/// Which level weight multiplies the dyadic energy sum.
enum class IntervalWeight {
  growing,    // 2^{+p}: converges to 1/|y - x|
  shrinking,  // 2^{-p}: the displayed weight, which tends to zero
};

/// Energy of the affine function (t - x)/(y - x) on the partition of [x, y]
/// by the dyadic points j/2^p, times the level weight.
double interval_discrete_energy(double x, double y, int p,
                                IntervalWeight weight = IntervalWeight::growing);

struct IntervalEnergyRow {
  int p = 0;
  double energy = 0.0;
  double error = 0.0;  // energy - 1/|y - x|
};

std::vector<IntervalEnergyRow> interval_energy_table(double x, double y, int p_max,
                                                     IntervalWeight weight = IntervalWeight::growing);

}  // namespace wlab
