#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "wlab/geometry.hpp"
#include "wlab/params.hpp"

namespace wlab {

/// Values closer than this are one eigenvalue.
inline constexpr double kEigenvalueTolerance = 1e-9;

/// Matrix of -Delta_m restricted to V_m \ V_0. Rows follow chain order; the
/// matrix is block diagonal, one tridiagonal block per run of interior vertices
/// between consecutive fixed points.
struct DirichletMatrix {
  struct Block {
    std::size_t first_row = 0;
    Eigen::VectorXd diagonal;
    Eigen::VectorXd off_diagonal;
  };

  int level = 0;
  std::vector<std::size_t> chain_positions;  // chain index of each row
  std::vector<Block> blocks;

  [[nodiscard]] std::size_t size() const noexcept { return chain_positions.size(); }
  [[nodiscard]] Eigen::SparseMatrix<double> sparse() const;
  [[nodiscard]] Eigen::MatrixXd dense() const;
};

/// Assembles the matrix from the chain adjacency of `graph`.
DirichletMatrix dirichlet_matrix(const LevelGraph& graph);
DirichletMatrix dirichlet_matrix(const WeierstrassParams& params, int m, const Budget& budget = {});

enum class Provenance { direct, oracle, decimation };

struct SpectrumEntry {
  double value = 0.0;
  std::size_t multiplicity = 0;
};

/// Multiset of Dirichlet eigenvalues, ascending and grouped.
struct Spectrum {
  int level = 0;
  Provenance provenance = Provenance::direct;
  std::vector<SpectrumEntry> entries;

  [[nodiscard]] std::size_t total_multiplicity() const noexcept;
  [[nodiscard]] std::vector<double> values() const;
  /// Multiplicity of the entry within kEigenvalueTolerance of `value`, or 0.
  [[nodiscard]] std::size_t multiplicity_of(double value) const;
};

/// Sorts and merges values whose gap to the first member of the running group
/// is below `tolerance`; each group is reported at its mean.
Spectrum group_eigenvalues(std::vector<double> values, int level, Provenance provenance,
                           double tolerance = kEigenvalueTolerance);

enum class EigenMethod {
  tridiagonal_blocks,  // implicit QL on each block (no Householder reduction needed)
  dense,               // full dense symmetric eigensolve of the assembled matrix
};

/// Numerical Dirichlet spectrum. Throws Errc::size_limit above budget.max_eigen_level.
Spectrum direct_spectrum(const WeierstrassParams& params, int m, const Budget& budget = {},
                         EigenMethod method = EigenMethod::tridiagonal_blocks);

/// Closed-form path spectrum 2 - 2 cos(k pi / nb^m), k = 1..nb^m - 1, each
/// with multiplicity nb - 1.
Spectrum oracle_spectrum(const WeierstrassParams& params, int m);

/// max over interior X of |Delta_m u(X) + eigenvalue u(X)|.
double eigen_residual(int nb, int m, std::span<const double> u, double eigenvalue);

enum class CountingScale { none, paper };

/// 1 for `none`, eta nb^m for `paper`.
double counting_factor(const WeierstrassParams& params, int m, CountingScale scale);

/// Eigenvalues (with multiplicity) whose value times `factor` is <= x.
std::size_t count_eigenvalues(const Spectrum& spectrum, double x, double factor = 1.0);

std::size_t counting_function(const WeierstrassParams& params, int m, double x,
                              CountingScale scale, const Budget& budget = {});

struct WeylRow {
  int level = 0;
  std::size_t total = 0;
  double log_count_per_level = 0.0;  // ln(total)/m
  double log_increment = 0.0;        // ln(total_m / total_{m-1}); 0 on the first row
};

struct WeylSample {
  double x = 0.0;
  double phase = 0.0;  // ln x modulo ln nb
  double ratio = 0.0;  // N(x)/x
};

/// N_m(x)/x against N_{m+1}(nb x)/(nb x) on the paper scale.
struct WeylOverlay {
  double x = 0.0;
  double coarse = 0.0;
  double fine = 0.0;
  double relative_difference = 0.0;
};

struct WeylAnalysis {
  std::vector<WeylRow> rows;
  std::vector<WeylSample> samples;  // top level, top decade
  std::vector<WeylOverlay> overlay;  // last two levels, top decade of the coarser one
  double max_overlay_difference = 0.0;
};

WeylAnalysis weyl_analysis(const WeierstrassParams& params, int m_first, int m_last,
                           int sample_count = 64, const Budget& budget = {});

/// eta^{-2} nb^{(5 - 2 D_W) m} for m = 0..m_last. The sequence grows without
/// bound, so only the terms are reported.
std::vector<double> renormalization_sequence(const WeierstrassParams& params, int m_last);

}  // namespace wlab
