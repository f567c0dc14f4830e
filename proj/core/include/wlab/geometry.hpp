#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "wlab/params.hpp"

namespace wlab {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Sequence of letters in {0,...,nb-1}. The first letter is the outermost
/// contraction: T_w = T_{w[0]} o T_{w[1]} o ... o T_{w[m-1]}.
struct Word {
  std::vector<int> letters;

  [[nodiscard]] std::size_t length() const noexcept { return letters.size(); }
};

/// Base-nb digits of `index`, most significant first, padded to `length`.
Word word_of_index(int nb, int length, std::size_t index);

/// T_i(x, y) = ((x+i)/nb, lambda*y + cos(2 pi (x+i)/nb)).
Point2 contraction(const WeierstrassParams& params, int i, Point2 p);

/// Fixed point P_i of T_i.
Point2 fixed_point(const WeierstrassParams& params, int i);

Point2 apply_word(const WeierstrassParams& params, const Word& word, Point2 p);

/// Deduplicated, abscissa-ordered vertex chain of the level-m graph.
struct LevelGraph {
  int level = 0;
  int nb = 0;
  std::vector<Point2> vertices;
  std::vector<std::size_t> boundary_indices;  // chain positions of P_0..P_{nb-1}

  [[nodiscard]] std::size_t size() const noexcept { return vertices.size(); }
  [[nodiscard]] std::size_t edge_count() const noexcept {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  [[nodiscard]] bool is_boundary(std::size_t index) const;
  /// Chain neighbours; one for the chain ends, two elsewhere.
  [[nodiscard]] std::vector<std::size_t> neighbours(std::size_t index) const;
};

/// Two generated points are the same vertex when both coordinates differ by
/// less than this.
inline constexpr double kDedupTolerance = 1e-9;

/// Number of distinct vertices, (nb-1) nb^m + 1.
std::size_t chain_vertex_count(int nb, int m);

/// The closed form 2 nb^m + nb - 2 quoted for the vertex count. It agrees
/// with chain_vertex_count only for nb = 3 (or m = 0).
std::size_t quoted_vertex_count(int nb, int m);

LevelGraph vertex_chain(const WeierstrassParams& params, int m, const Budget& budget = {});

struct Polygon {
  int level = 0;
  std::size_t index = 0;
  std::vector<Point2> vertices;  // T_w(P_0), ..., T_w(P_{nb-1})
};

std::vector<Polygon> polygons(const WeierstrassParams& params, int m, const Budget& budget = {});

/// Chain position of vertex k of polygon j; consecutive polygons share one vertex.
constexpr std::size_t polygon_vertex_index(int nb, std::size_t polygon, int k) noexcept {
  return polygon * static_cast<std::size_t>(nb - 1) + static_cast<std::size_t>(k);
}

struct EdgeHeight {
  std::size_t first = 0;   // chain index of T_w(P_j)
  std::size_t second = 0;  // chain index of T_w(P_{j+1})
  double height = 0.0;          // |y(second) - y(first)|
  double sampled_extent = 0.0;  // vertical extent of the refined sub-graph over the edge
  double lower_bound = 0.0;     // lower_bound_constant * lambda^m (not a guarantee)
  double upper_bound = 0.0;     // eta * L_m^{2-D_W}
};

/// One entry per chain edge. `refine` extra levels sample the sub-graph.
std::vector<EdgeHeight> edge_heights(const WeierstrassParams& params, int m, int refine = 4,
                                     const Budget& budget = {});

struct BoxCount {
  int level = 0;
  int n_sub = 1;
  std::size_t columns = 0;
  double side = 0.0;
  std::size_t squares = 0;
  /// Total of the per-column cover bound n_sub {C (L_m/n_sub)^{1-D_W} + 1}.
  double bound = 0.0;
};

/// Counts grid squares of side L_m/n_sub met by the graph, sampled at
/// level m + refine, column by column.
BoxCount box_count(const WeierstrassParams& params, int m, int n_sub, int refine = 4,
                   const Budget& budget = {});

/// max(lower constant (nb-1)^{2-D_W}, eta), the constant of the cover bound.
double cover_constant(const WeierstrassParams& params);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Ordinary least squares y = slope x + intercept.
LineFit least_squares(std::span<const double> x, std::span<const double> y);

struct BoxDimensionEstimate {
  std::vector<BoxCount> counts;
  LineFit fit;  // ln(squares) against ln(1/side)
};

BoxDimensionEstimate box_dimension(const WeierstrassParams& params, int m_first, int m_last,
                                   int n_sub = 1, int refine = 4, const Budget& budget = {});

}  // namespace wlab
