#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "wlab/error.hpp"
#include "wlab/geometry.hpp"
#include "wlab/params.hpp"
#include "wlab/spectral.hpp"
#include "wlab/tridiagonal.hpp"

namespace wlab {
namespace {

const WeierstrassParams kHalfThree = make_params(0.5, 3);

TEST(Tridiagonal, SolvesAndDetectsSingular) {
  const std::vector<double> lower{-1, -1};
  const std::vector<double> diag{2, 2, 2};
  const std::vector<double> upper{-1, -1};
  const std::vector<double> rhs{1, 0, 1};
  const auto x = solve_tridiagonal(lower, diag, upper, rhs);
  for (double v : x) EXPECT_NEAR(v, 1.0, 1e-14);
  const std::vector<double> zero{0, 2, 2};
  EXPECT_THROW(solve_tridiagonal(lower, zero, upper, rhs), Error);
  EXPECT_DOUBLE_EQ(path_determinant(0, 5.0), 1.0);
  EXPECT_DOUBLE_EQ(path_determinant(3, 2.0), 4.0);
  EXPECT_NEAR(path_determinant(2, 1.0), 0.0, 1e-15);
}

TEST(DirichletMatrix, LevelOneStructure) {
  const DirichletMatrix a = dirichlet_matrix(kHalfThree, 1);
  ASSERT_EQ(a.size(), 4u);
  EXPECT_EQ(a.chain_positions, (std::vector<std::size_t>{1, 2, 4, 5}));
  ASSERT_EQ(a.blocks.size(), 2u);
  const Eigen::MatrixXd d = a.dense();
  Eigen::MatrixXd expected(4, 4);
  expected << 2, -1, 0, 0, -1, 2, 0, 0, 0, 0, 2, -1, 0, 0, -1, 2;
  EXPECT_TRUE(d.isApprox(expected));
  EXPECT_TRUE(Eigen::MatrixXd(a.sparse()).isApprox(expected));
}

TEST(DirectSpectrum, LevelOne) {
  const Spectrum s = direct_spectrum(kHalfThree, 1);
  ASSERT_EQ(s.entries.size(), 2u);
  EXPECT_NEAR(s.entries[0].value, 1.0, 1e-10);
  EXPECT_EQ(s.entries[0].multiplicity, 2u);
  EXPECT_NEAR(s.entries[1].value, 3.0, 1e-10);
  EXPECT_EQ(s.entries[1].multiplicity, 2u);
  EXPECT_EQ(s.multiplicity_of(3.0), 2u);
  EXPECT_EQ(s.multiplicity_of(2.0), 0u);
}

TEST(DirectSpectrum, LevelTwo) {
  const Spectrum s = direct_spectrum(kHalfThree, 2);
  EXPECT_EQ(s.total_multiplicity(), 16u);
  EXPECT_EQ(s.multiplicity_of(1.0), 2u);
  EXPECT_EQ(s.multiplicity_of(3.0), 2u);
  EXPECT_EQ(s.multiplicity_of(2.0 * (1.0 + std::cos(std::numbers::pi / 9.0))), 2u);
}

TEST(DirectSpectrum, MatchesOracleAndDense) {
  for (int nb : {2, 3, 4, 5}) {
    const WeierstrassParams p = make_params(0.8, nb);
    for (int m = 1; m <= 4; ++m) {
      const Spectrum direct = direct_spectrum(p, m);
      const Spectrum oracle = oracle_spectrum(p, m);
      ASSERT_EQ(direct.entries.size(), oracle.entries.size()) << nb << " " << m;
      for (std::size_t k = 0; k < direct.entries.size(); ++k) {
        EXPECT_NEAR(direct.entries[k].value, oracle.entries[k].value, 1e-9);
        EXPECT_EQ(direct.entries[k].multiplicity, oracle.entries[k].multiplicity);
      }
      if (m <= 3) {
        const Spectrum dense = direct_spectrum(p, m, {}, EigenMethod::dense);
        ASSERT_EQ(dense.entries.size(), direct.entries.size());
        for (std::size_t k = 0; k < dense.entries.size(); ++k) {
          EXPECT_NEAR(dense.entries[k].value, direct.entries[k].value, 1e-10);
          EXPECT_EQ(dense.entries[k].multiplicity, direct.entries[k].multiplicity);
        }
      }
    }
  }
}

TEST(DirectSpectrum, LevelCap) {
  Budget b;
  b.max_eigen_level = 2;
  try {
    direct_spectrum(kHalfThree, 3, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::size_limit);
  }
}

TEST(Spectrum, TwoNeverAppearsForOddBase) {
  for (int nb : {3, 5}) {
    const WeierstrassParams p = make_params(0.8, nb);
    for (int m = 1; m <= 5; ++m) EXPECT_EQ(direct_spectrum(p, m).multiplicity_of(2.0), 0u);
  }
  // Even bases have 2 = 2 - 2 cos(pi/2) in every level-m spectrum, m >= 1.
  EXPECT_EQ(direct_spectrum(make_params(0.8, 4), 1).multiplicity_of(2.0), 3u);
}

TEST(GroupEigenvalues, MergesWithinTolerance) {
  const Spectrum s = group_eigenvalues({3.0, 1.0, 1.0 + 1e-12, 2.0}, 1, Provenance::direct);
  ASSERT_EQ(s.entries.size(), 3u);
  EXPECT_EQ(s.entries[0].multiplicity, 2u);
  EXPECT_EQ(s.total_multiplicity(), 4u);
}

TEST(EigenResidual, PathEigenvector) {
  // 2 - 2 cos(pi/9) with the sine mode on the first block of level 2.
  const double lambda = 2.0 - 2.0 * std::cos(std::numbers::pi / 9.0);
  std::vector<double> u(19, 0.0);
  for (int j = 1; j < 9; ++j) u[j] = std::sin(std::numbers::pi * j / 9.0);
  EXPECT_LT(eigen_residual(3, 2, u, lambda), 1e-14);
  EXPECT_GT(eigen_residual(3, 2, u, lambda + 0.1), 1e-3);
}

TEST(Counting, TopOfSpectrum) {
  const std::size_t expected[] = {4, 16, 52, 160};
  for (int m = 1; m <= 4; ++m) {
    const double factor = counting_factor(kHalfThree, m, CountingScale::paper);
    EXPECT_NEAR(factor, kHalfThree.eta * std::pow(3.0, m), 1e-9);
    EXPECT_EQ(counting_function(kHalfThree, m, 4.0 * factor, CountingScale::paper), expected[m - 1]);
    EXPECT_EQ(counting_function(kHalfThree, m, 4.0, CountingScale::none), expected[m - 1]);
  }
  const Spectrum s = direct_spectrum(kHalfThree, 1);
  EXPECT_EQ(count_eigenvalues(s, 0.5), 0u);
  EXPECT_EQ(count_eigenvalues(s, 1.0 + 1e-12), 2u);
  EXPECT_EQ(count_eigenvalues(s, 2.0), 2u);
}

TEST(Weyl, RowsAndOverlay) {
  const WeylAnalysis w = weyl_analysis(kHalfThree, 1, 6);
  ASSERT_EQ(w.rows.size(), 6u);
  for (std::size_t k = 0; k < w.rows.size(); ++k) {
    const int m = static_cast<int>(k) + 1;
    EXPECT_EQ(w.rows[k].total, 2 * checked_pow(3, m) - 2);
    EXPECT_NEAR(w.rows[k].log_count_per_level, std::log(2.0 * std::pow(3.0, m) - 2.0) / m, 1e-12);
    // ln 4 = ln 16 / 2, strictly decreasing afterwards.
    if (k > 1) EXPECT_LT(w.rows[k].log_count_per_level, w.rows[k - 1].log_count_per_level);
  }
  EXPECT_NEAR(w.rows[3].log_count_per_level, 1.268793453808457, 1e-12);
  EXPECT_FALSE(w.samples.empty());
  EXPECT_FALSE(w.overlay.empty());
  EXPECT_LT(w.max_overlay_difference, 0.05);
}

TEST(Renormalization, Sequence) {
  const auto seq = renormalization_sequence(kHalfThree, 3);
  ASSERT_EQ(seq.size(), 4u);
  EXPECT_NEAR(seq[0], 1.0 / (kHalfThree.eta * kHalfThree.eta), 1e-16);
  EXPECT_NEAR(seq[3] / seq[2], 12.0, 1e-10);
}

}  // namespace
}  // namespace wlab
