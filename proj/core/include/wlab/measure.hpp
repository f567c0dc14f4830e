#pragma once

#include <span>
#include <vector>

#include "wlab/geometry.hpp"
#include "wlab/params.hpp"

namespace wlab {

struct PolygonArea {
  double value = 0.0;
  bool degenerate = false;  // collinear vertices, area below kDegenerateArea
};

inline constexpr double kDegenerateArea = 1e-15;

/// Lebesgue area of an nb-gon with ordered vertices V_0..V_{nb-1}.
/// For three vertices this is |V0V1 x V0V2| / 2; otherwise the fan
/// sum (1/2) sum_j |V_jV_{j+1} x V_jV_{nb-1}|.
PolygonArea polygon_area(std::span<const Point2> vertices);
inline PolygonArea polygon_area(const Polygon& poly) { return polygon_area(poly.vertices); }

/// Area ratios mu_i = area(T_i(P)) / area(P) of the level-1 cells against the
/// level-0 polygon, and the same ratios normalized to sum to one.
struct MeasureWeights {
  std::vector<double> raw;
  std::vector<double> normalized;
};

MeasureWeights measure_weights(const WeierstrassParams& params);

enum class MeasureMode { raw, normalized };

/// Product of the per-letter weights; the empty word has measure 1.
double cell_measure(const MeasureWeights& weights, const Word& word,
                    MeasureMode mode = MeasureMode::normalized);

/// Measures of all nb^m level-m cells, indexed like `polygons`.
std::vector<double> cell_measures(const MeasureWeights& weights, int nb, int m,
                                  MeasureMode mode = MeasureMode::normalized);

/// Per-polygon factor applied in `integrate`.
enum class QuadratureWeight {
  vertex_average,  // kappa = 1/nb: constants integrate exactly
  vertex_sum,      // kappa = 1: sum over polygon vertices without averaging
};

/// sum_j kappa * (sum_{X vertex of P_{m,j}} u(X)) * mu(P_{m,j}) with the
/// normalized measure; `u` is indexed by chain position at level m.
double integrate(const WeierstrassParams& params, int m, std::span<const double> u,
                 QuadratureWeight weight = QuadratureWeight::vertex_average);

/// Same quadrature with precomputed weights, to avoid recomputing areas in loops.
double integrate(const MeasureWeights& weights, int nb, int m, std::span<const double> u,
                 QuadratureWeight weight = QuadratureWeight::vertex_average);

}  // namespace wlab
