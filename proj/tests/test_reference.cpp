#include <gtest/gtest.h>

#include <cmath>

#include "wlab/error.hpp"
#include "wlab/reference.hpp"

namespace wlab {
namespace {

TEST(Gasket, Identities) {
  const GasketConstants g = gasket_constants();
  EXPECT_NEAR(g.beta_sg, 0.736965594166206, 1e-14);
  EXPECT_NEAR(g.d_sg, 2.150660103087124, 1e-14);
  EXPECT_NEAR(std::pow(0.5, g.beta_sg), 0.6, 1e-12);
  EXPECT_NEAR(g.d_sg * g.beta_sg, std::log(3.0) / std::log(2.0), 1e-12);
}

TEST(Interval, Resistance) {
  EXPECT_DOUBLE_EQ(interval_resistance(0.25, 0.75), 0.5);
  EXPECT_DOUBLE_EQ(interval_resistance(0.75, 0.25), 0.5);
  EXPECT_THROW(interval_resistance(-0.1, 0.5), Error);
}

TEST(Interval, DyadicEnergy) {
  EXPECT_NEAR(interval_discrete_energy(0.25, 0.75, 10), 2.0, 1e-12);
  // Off-grid endpoints converge as p grows.
  const double target = 1.0 / (0.7 - 0.1);
  EXPECT_NEAR(interval_discrete_energy(0.1, 0.7, 20), target, 1e-5);
  const auto rows = interval_energy_table(0.1, 0.7, 20);
  ASSERT_EQ(rows.size(), 21u);
  EXPECT_LT(std::abs(rows.back().error), std::abs(rows[3].error) + 1e-15);
  EXPECT_LT(interval_discrete_energy(0.25, 0.75, 20, IntervalWeight::shrinking), 1e-10);
  EXPECT_THROW(interval_discrete_energy(0.5, 0.5, 4), Error);
  EXPECT_THROW(interval_discrete_energy(0.1, 0.5, 60), Error);
}

}  // namespace
}  // namespace wlab
