#include "wlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "detail/parallel.hpp"
#include "wlab/error.hpp"

namespace wlab {

namespace {

void check_letter(const WeierstrassParams& params, int i) {
  if (i < 0 || i >= params.nb) {
    throw Error(Errc::out_of_range,
                "contraction index " + std::to_string(i) + " outside [0," +
                    std::to_string(params.nb - 1) + "]");
  }
}

bool same_vertex(Point2 a, Point2 b) {
  return std::abs(a.x - b.x) < kDedupTolerance && std::abs(a.y - b.y) < kDedupTolerance;
}

/// All nb^{m+1} images T_w(P_j), word-major in lexicographic order.
std::vector<Point2> raw_images(const WeierstrassParams& params, int m, const Budget& budget) {
  const std::size_t words = checked_pow(params.nb, m);
  const std::size_t total = words * static_cast<std::size_t>(params.nb);
  if (total > budget.max_vertices) {
    throw Error(Errc::size_limit, "level " + std::to_string(m) + " needs " +
                                      std::to_string(total) + " points, budget is " +
                                      std::to_string(budget.max_vertices));
  }
  std::vector<Point2> current;
  current.reserve(total);
  for (int j = 0; j < params.nb; ++j) current.push_back(fixed_point(params, j));
  std::vector<Point2> next;
  next.reserve(total);
  for (int level = 0; level < m; ++level) {
    next.clear();
    for (int i = 0; i < params.nb; ++i) {
      for (const Point2& p : current) next.push_back(contraction(params, i, p));
    }
    current.swap(next);
  }
  return current;
}

}  // namespace

Word word_of_index(int nb, int length, std::size_t index) {
  Word w;
  w.letters.assign(static_cast<std::size_t>(length), 0);
  for (int k = length - 1; k >= 0; --k) {
    w.letters[static_cast<std::size_t>(k)] = static_cast<int>(index % static_cast<std::size_t>(nb));
    index /= static_cast<std::size_t>(nb);
  }
  if (index != 0) throw Error(Errc::out_of_range, "index does not fit in the word length");
  return w;
}

Point2 contraction(const WeierstrassParams& params, int i, Point2 p) {
  check_letter(params, i);
  const double x = (p.x + i) / params.nb;
  return {x, params.lambda * p.y + std::cos(2.0 * std::numbers::pi * x)};
}

Point2 fixed_point(const WeierstrassParams& params, int i) {
  check_letter(params, i);
  const double t = static_cast<double>(i) / (params.nb - 1);
  return {t, std::cos(2.0 * std::numbers::pi * t) / (1.0 - params.lambda)};
}

Point2 apply_word(const WeierstrassParams& params, const Word& word, Point2 p) {
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    p = contraction(params, *it, p);
  }
  return p;
}

std::vector<std::pair<std::size_t, std::size_t>> LevelGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_count());
  for (std::size_t k = 0; k + 1 < vertices.size(); ++k) out.emplace_back(k, k + 1);
  return out;
}

bool LevelGraph::is_boundary(std::size_t index) const {
  return std::find(boundary_indices.begin(), boundary_indices.end(), index) !=
         boundary_indices.end();
}

std::vector<std::size_t> LevelGraph::neighbours(std::size_t index) const {
  std::vector<std::size_t> out;
  if (index > 0) out.push_back(index - 1);
  if (index + 1 < vertices.size()) out.push_back(index + 1);
  return out;
}

std::size_t chain_vertex_count(int nb, int m) {
  return static_cast<std::size_t>(nb - 1) * checked_pow(nb, m) + 1;
}

std::size_t quoted_vertex_count(int nb, int m) {
  return 2 * checked_pow(nb, m) + static_cast<std::size_t>(nb) - 2;
}

LevelGraph vertex_chain(const WeierstrassParams& params, int m, const Budget& budget) {
  std::vector<Point2> points = raw_images(params, m, budget);
  std::sort(points.begin(), points.end(), [](Point2 a, Point2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  LevelGraph graph;
  graph.level = m;
  graph.nb = params.nb;
  graph.vertices.reserve(chain_vertex_count(params.nb, m));
  for (const Point2& p : points) {
    if (graph.vertices.empty() || !same_vertex(graph.vertices.back(), p)) {
      graph.vertices.push_back(p);
    }
  }
  for (int i = 0; i < params.nb; ++i) {
    const Point2 target = fixed_point(params, i);
    auto it = std::lower_bound(graph.vertices.begin(), graph.vertices.end(),
                               target.x - kDedupTolerance,
                               [](Point2 v, double x) { return v.x < x; });
    while (it != graph.vertices.end() && !same_vertex(*it, target)) {
      if (it->x > target.x + kDedupTolerance) break;
      ++it;
    }
    if (it == graph.vertices.end() || !same_vertex(*it, target)) {
      throw Error(Errc::internal, "fixed point missing from the vertex chain");
    }
    graph.boundary_indices.push_back(static_cast<std::size_t>(it - graph.vertices.begin()));
  }
  return graph;
}

std::vector<Polygon> polygons(const WeierstrassParams& params, int m, const Budget& budget) {
  const std::vector<Point2> images = raw_images(params, m, budget);
  const std::size_t count = checked_pow(params.nb, m);
  const auto nb = static_cast<std::size_t>(params.nb);
  std::vector<Polygon> out(count);
  for (std::size_t j = 0; j < count; ++j) {
    out[j].level = m;
    out[j].index = j;
    out[j].vertices.assign(images.begin() + static_cast<std::ptrdiff_t>(j * nb),
                           images.begin() + static_cast<std::ptrdiff_t>((j + 1) * nb));
  }
  return out;
}

std::vector<EdgeHeight> edge_heights(const WeierstrassParams& params, int m, int refine,
                                     const Budget& budget) {
  if (refine < 0) throw Error(Errc::invalid_argument, "refine must be >= 0");
  const LevelGraph coarse = vertex_chain(params, m, budget);
  const LevelGraph fine = vertex_chain(params, m + refine, budget);
  const std::size_t per_edge = checked_pow(params.nb, refine);
  const double upper =
      params.eta * std::pow(column_width(params.nb, m), 2.0 - params.d_w);
  const double lower = lower_bound_constant(params.lambda, params.nb) * std::pow(params.lambda, m);

  std::vector<EdgeHeight> out(coarse.edge_count());
  for (std::size_t k = 0; k < out.size(); ++k) {
    EdgeHeight& e = out[k];
    e.first = k;
    e.second = k + 1;
    e.height = std::abs(coarse.vertices[k + 1].y - coarse.vertices[k].y);
    const auto begin = fine.vertices.begin() + static_cast<std::ptrdiff_t>(k * per_edge);
    const auto end = begin + static_cast<std::ptrdiff_t>(per_edge + 1);
    const auto [lo, hi] =
        std::minmax_element(begin, end, [](Point2 a, Point2 b) { return a.y < b.y; });
    e.sampled_extent = hi->y - lo->y;
    e.lower_bound = lower;
    e.upper_bound = upper;
  }
  return out;
}

double cover_constant(const WeierstrassParams& params) {
  const double lower = std::pow(params.nb - 1.0, 2.0 - params.d_w) *
                       lower_bound_constant(params.lambda, params.nb);
  return std::max(lower, params.eta);
}

BoxCount box_count(const WeierstrassParams& params, int m, int n_sub, int refine,
                   const Budget& budget) {
  if (n_sub < 1) throw Error(Errc::invalid_argument, "n_sub must be >= 1");
  if (refine < 0) throw Error(Errc::invalid_argument, "refine must be >= 0");
  const LevelGraph fine = vertex_chain(params, m + refine, budget);
  const std::size_t per_column = checked_pow(params.nb, refine);

  BoxCount result;
  result.level = m;
  result.n_sub = n_sub;
  result.columns = static_cast<std::size_t>(params.nb - 1) * checked_pow(params.nb, m);
  const double width = column_width(params.nb, m);
  result.side = width / n_sub;

  const double side = result.side;
  const auto partial = detail::map_chunks(result.columns, [&](std::size_t begin, std::size_t end) {
    std::size_t squares = 0;
    for (std::size_t c = begin; c < end; ++c) {
      const auto first = fine.vertices.begin() + static_cast<std::ptrdiff_t>(c * per_column);
      const auto last = first + static_cast<std::ptrdiff_t>(per_column + 1);
      const auto [lo, hi] =
          std::minmax_element(first, last, [](Point2 a, Point2 b) { return a.y < b.y; });
      const auto top = static_cast<long long>(std::floor(hi->y / side));
      const auto bottom = static_cast<long long>(std::floor(lo->y / side));
      squares += static_cast<std::size_t>(top - bottom + 1);
    }
    return squares;
  }, 512);
  result.squares = std::accumulate(partial.begin(), partial.end(), std::size_t{0});

  const double per_column_bound =
      n_sub * (cover_constant(params) * std::pow(width / n_sub, 1.0 - params.d_w) + 1.0);
  result.bound = per_column_bound * static_cast<double>(result.columns);
  return result;
}

LineFit least_squares(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(Errc::invalid_argument, "least squares needs two or more paired samples");
  }
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxx += (x[k] - mx) * (x[k] - mx);
    sxy += (x[k] - mx) * (y[k] - my);
  }
  if (sxx == 0.0) throw Error(Errc::invalid_argument, "least squares needs distinct abscissas");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  return fit;
}

BoxDimensionEstimate box_dimension(const WeierstrassParams& params, int m_first, int m_last,
                                   int n_sub, int refine, const Budget& budget) {
  if (m_first < 0 || m_last <= m_first) {
    throw Error(Errc::invalid_argument, "box dimension needs a level range with two or more levels");
  }
  BoxDimensionEstimate est;
  std::vector<double> xs;
  std::vector<double> ys;
  for (int m = m_first; m <= m_last; ++m) {
    est.counts.push_back(box_count(params, m, n_sub, refine, budget));
    xs.push_back(std::log(1.0 / est.counts.back().side));
    ys.push_back(std::log(static_cast<double>(est.counts.back().squares)));
  }
  est.fit = least_squares(xs, ys);
  return est;
}

}  // namespace wlab
