#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "wlab/geometry.hpp"
#include "wlab/params.hpp"

namespace wlab {

/// Energy renormalization. `paper` uses r^{-1} = nb^{5 - 2 D_W} (= nb/lambda^2),
/// which drives the resistance dimension and the counting normalization;
/// `conservative` uses r^{-1} = nb, the only choice under which the harmonic
/// extension preserves energy on the chain.
enum class Normalization { paper, conservative };

struct NormalizationMode {
  Normalization tag = Normalization::paper;
  double r_inverse = 1.0;
};

NormalizationMode normalization(const WeierstrassParams& params, Normalization tag);

/// Level-m energy weight eta^{-2} (r^{-1})^m.
struct EnergyForm {
  int level = 0;
  NormalizationMode mode;
  double weight = 0.0;
};

EnergyForm energy_form(const WeierstrassParams& params, int m, Normalization tag);

/// Sum of squared differences over chain edges.
double edge_sum(std::span<const double> u);

/// weight(m) * sum over chain edges of (u(X) - u(Y))^2.
double energy(const WeierstrassParams& params, int m, std::span<const double> u, Normalization tag);

/// Minimal-energy extension of level-(m-1) values to level m. Uniform edge
/// weights within a level make the minimizer independent of the normalization.
std::vector<double> harmonic_extend(const WeierstrassParams& params, int m,
                                    std::span<const double> parent);

/// Discrete harmonic function on the level-m chain with the given values on V_0.
std::vector<double> dirichlet_solve(const WeierstrassParams& params, int m,
                                    std::span<const double> boundary);

/// True when chain position `index` at level m is one of the fixed points.
bool is_boundary_vertex(int nb, int m, std::size_t index);

/// Delta_m u(X) = sum over chain neighbours Y of (u(Y) - u(X)), X off V_0.
double laplacian_apply(int nb, int m, std::span<const double> u, std::size_t vertex);

/// Integral of the tent function at `vertex`, extended harmonically by `depth`
/// levels and integrated with the vertex-average quadrature.
double spline_integral(const WeierstrassParams& params, int m, std::size_t vertex, int depth = 3);

/// eta^{-2} (r^{-1})^m (integral of the tent)^{-1} Delta_m u(X).
double pointwise_laplacian(const WeierstrassParams& params, int m, std::span<const double> u,
                           std::size_t vertex, Normalization tag, int depth = 3);

/// Level-by-level pointwise Laplacian of a function sampled at the vertices,
/// evaluated at one fixed geometric vertex. Rows carry the ratio to the
/// previous level (0 for the first row).
struct LaplacianSample {
  int level = 0;
  std::size_t vertex = 0;
  double value = 0.0;
  double ratio = 0.0;
};

std::vector<LaplacianSample> pointwise_laplacian_table(
    const WeierstrassParams& params, const std::function<double(Point2)>& u, int base_level,
    std::size_t base_vertex, int last_level, Normalization tag, int depth = 3);

/// Effective resistance between chain positions at level m: the inverse of the
/// minimal energy over functions pinned to 0 at `from` and 1 at `to`, solved on
/// the chain with every other vertex free. Equal positions give 0.
double resistance(const WeierstrassParams& params, int m, std::size_t from, std::size_t to,
                  Normalization tag);

/// Series-resistance closed form |from - to| / weight(m) on the chain.
double series_resistance(const WeierstrassParams& params, int m, std::size_t from,
                         std::size_t to, Normalization tag);

/// Dimension of the graph in the effective resistance metric.
struct ResistanceDimension {
  enum class Regime { above_threshold, below_threshold };  // lambda > 1/nb, lambda < 1/nb
  Regime regime = Regime::above_threshold;
  double dimension = 0.0;
  double weyl_exponent = 0.0;  // d / (d + 1)
};

ResistanceDimension resistance_dimension(const WeierstrassParams& params);

}  // namespace wlab
