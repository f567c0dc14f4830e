#include "wlab/measure.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "wlab/error.hpp"

namespace wlab {

namespace {

double cross(Point2 origin, Point2 a, Point2 b) {
  return (a.x - origin.x) * (b.y - origin.y) - (a.y - origin.y) * (b.x - origin.x);
}

}  // namespace

PolygonArea polygon_area(std::span<const Point2> v) {
  if (v.size() < 3) throw Error(Errc::invalid_argument, "polygon needs three or more vertices");
  double twice = 0.0;
  if (v.size() == 3) {
    twice = std::abs(cross(v[0], v[1], v[2]));
  } else {
    const Point2 last = v.back();
    for (std::size_t j = 0; j + 1 < v.size(); ++j) twice += std::abs(cross(v[j], v[j + 1], last));
  }
  PolygonArea area{0.5 * twice, false};
  if (area.value < kDegenerateArea) area = {0.0, true};
  return area;
}

MeasureWeights measure_weights(const WeierstrassParams& params) {
  const std::vector<Polygon> base = polygons(params, 0);
  const double base_area = polygon_area(base.front()).value;
  if (base_area <= 0.0) throw Error(Errc::singular, "level-0 polygon has zero area");
  MeasureWeights w;
  for (const Polygon& cell : polygons(params, 1)) {
    w.raw.push_back(polygon_area(cell).value / base_area);
  }
  const double total = std::accumulate(w.raw.begin(), w.raw.end(), 0.0);
  for (double r : w.raw) w.normalized.push_back(r / total);
  return w;
}

double cell_measure(const MeasureWeights& weights, const Word& word, MeasureMode mode) {
  const std::vector<double>& per_letter =
      mode == MeasureMode::raw ? weights.raw : weights.normalized;
  double out = 1.0;
  for (int letter : word.letters) {
    if (letter < 0 || static_cast<std::size_t>(letter) >= per_letter.size()) {
      throw Error(Errc::out_of_range, "word letter " + std::to_string(letter) + " out of range");
    }
    out *= per_letter[static_cast<std::size_t>(letter)];
  }
  return out;
}

std::vector<double> cell_measures(const MeasureWeights& weights, int nb, int m, MeasureMode mode) {
  const std::vector<double>& per_letter =
      mode == MeasureMode::raw ? weights.raw : weights.normalized;
  std::vector<double> current{1.0};
  checked_pow(nb, m);
  for (int level = 0; level < m; ++level) {
    std::vector<double> next;
    next.reserve(current.size() * static_cast<std::size_t>(nb));
    // The new letter is innermost, so it becomes the least significant digit.
    for (double parent : current) {
      for (int i = 0; i < nb; ++i) next.push_back(parent * per_letter[static_cast<std::size_t>(i)]);
    }
    current.swap(next);
  }
  return current;
}

double integrate(const MeasureWeights& weights, int nb, int m, std::span<const double> u,
                 QuadratureWeight weight) {
  const std::size_t expected = chain_vertex_count(nb, m);
  if (u.size() != expected) {
    throw Error(Errc::invalid_argument, "quadrature needs " + std::to_string(expected) +
                                            " vertex values, got " + std::to_string(u.size()));
  }
  const std::vector<double> mu = cell_measures(weights, nb, m);
  const double kappa = weight == QuadratureWeight::vertex_average ? 1.0 / nb : 1.0;
  double total = 0.0;
  for (std::size_t j = 0; j < mu.size(); ++j) {
    double local = 0.0;
    for (int k = 0; k < nb; ++k) local += u[polygon_vertex_index(nb, j, k)];
    total += kappa * local * mu[j];
  }
  return total;
}

double integrate(const WeierstrassParams& params, int m, std::span<const double> u,
                 QuadratureWeight weight) {
  return integrate(measure_weights(params), params.nb, m, u, weight);
}

}  // namespace wlab
