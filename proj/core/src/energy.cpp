#include "wlab/energy.hpp"

#include <cmath>
#include <string>

#include "detail/refine.hpp"
#include "wlab/error.hpp"
#include "wlab/measure.hpp"
#include "wlab/tridiagonal.hpp"

namespace wlab {

namespace {

void require_size(std::span<const double> u, std::size_t expected, const char* what) {
  if (u.size() != expected) {
    throw Error(Errc::invalid_argument, std::string(what) + " needs " + std::to_string(expected) +
                                            " values, got " + std::to_string(u.size()));
  }
}

void require_vertex(int nb, int m, std::size_t vertex) {
  if (vertex >= chain_vertex_count(nb, m)) {
    throw Error(Errc::out_of_range, "vertex " + std::to_string(vertex) + " is not on level " +
                                        std::to_string(m));
  }
}

void require_interior(int nb, int m, std::size_t vertex) {
  require_vertex(nb, m, vertex);
  if (is_boundary_vertex(nb, m, vertex)) {
    throw Error(Errc::invalid_argument,
                "vertex " + std::to_string(vertex) + " lies on V_0, where the Laplacian is not defined");
  }
}

}  // namespace

NormalizationMode normalization(const WeierstrassParams& params, Normalization tag) {
  if (tag == Normalization::conservative) return {tag, static_cast<double>(params.nb)};
  return {tag, std::pow(static_cast<double>(params.nb), 5.0 - 2.0 * params.d_w)};
}

EnergyForm energy_form(const WeierstrassParams& params, int m, Normalization tag) {
  if (m < 0) throw Error(Errc::invalid_argument, "level must be >= 0");
  EnergyForm form;
  form.level = m;
  form.mode = normalization(params, tag);
  form.weight = std::pow(form.mode.r_inverse, m) / (params.eta * params.eta);
  return form;
}

double edge_sum(std::span<const double> u) {
  double sum = 0.0;
  for (std::size_t k = 0; k + 1 < u.size(); ++k) {
    const double d = u[k + 1] - u[k];
    sum += d * d;
  }
  return sum;
}

double energy(const WeierstrassParams& params, int m, std::span<const double> u,
              Normalization tag) {
  require_size(u, chain_vertex_count(params.nb, m), "energy");
  return energy_form(params, m, tag).weight * edge_sum(u);
}

std::vector<double> harmonic_extend(const WeierstrassParams& params, int m,
                                    std::span<const double> parent) {
  if (m < 1) throw Error(Errc::invalid_argument, "harmonic extension needs level >= 1");
  require_size(parent, chain_vertex_count(params.nb, m - 1), "harmonic extension");
  return detail::refine_segments(params.nb, parent, 0.0);
}

std::vector<double> dirichlet_solve(const WeierstrassParams& params, int m,
                                    std::span<const double> boundary) {
  require_size(boundary, static_cast<std::size_t>(params.nb), "Dirichlet solve");
  std::vector<double> u(boundary.begin(), boundary.end());
  for (int level = 1; level <= m; ++level) u = harmonic_extend(params, level, u);
  return u;
}

bool is_boundary_vertex(int nb, int m, std::size_t index) {
  return index % checked_pow(nb, m) == 0;
}

double laplacian_apply(int nb, int m, std::span<const double> u, std::size_t vertex) {
  require_size(u, chain_vertex_count(nb, m), "Laplacian");
  require_interior(nb, m, vertex);
  return (u[vertex - 1] - u[vertex]) + (u[vertex + 1] - u[vertex]);
}

double spline_integral(const WeierstrassParams& params, int m, std::size_t vertex, int depth) {
  if (depth < 0) throw Error(Errc::invalid_argument, "spline depth must be >= 0");
  require_interior(params.nb, m, vertex);
  std::vector<double> tent(chain_vertex_count(params.nb, m), 0.0);
  tent[vertex] = 1.0;
  for (int level = m + 1; level <= m + depth; ++level) tent = harmonic_extend(params, level, tent);
  return integrate(params, m + depth, tent);
}

double pointwise_laplacian(const WeierstrassParams& params, int m, std::span<const double> u,
                           std::size_t vertex, Normalization tag, int depth) {
  const double discrete = laplacian_apply(params.nb, m, u, vertex);
  const double weight = energy_form(params, m, tag).weight;
  return weight * discrete / spline_integral(params, m, vertex, depth);
}

std::vector<LaplacianSample> pointwise_laplacian_table(
    const WeierstrassParams& params, const std::function<double(Point2)>& u, int base_level,
    std::size_t base_vertex, int last_level, Normalization tag, int depth) {
  require_interior(params.nb, base_level, base_vertex);
  std::vector<LaplacianSample> rows;
  for (int level = base_level; level <= last_level; ++level) {
    const LevelGraph graph = vertex_chain(params, level);
    std::vector<double> values;
    values.reserve(graph.size());
    for (const Point2& p : graph.vertices) values.push_back(u(p));
    LaplacianSample row;
    row.level = level;
    row.vertex = base_vertex * checked_pow(params.nb, level - base_level);
    row.value = pointwise_laplacian(params, level, values, row.vertex, tag, depth);
    row.ratio = rows.empty() || rows.back().value == 0.0 ? 0.0 : row.value / rows.back().value;
    rows.push_back(row);
  }
  return rows;
}

double resistance(const WeierstrassParams& params, int m, std::size_t from, std::size_t to,
                  Normalization tag) {
  require_vertex(params.nb, m, from);
  require_vertex(params.nb, m, to);
  if (from == to) return 0.0;
  const std::size_t n = chain_vertex_count(params.nb, m);
  std::vector<double> lower(n - 1, -1.0);
  std::vector<double> upper(n - 1, -1.0);
  std::vector<double> diag(n, 2.0);
  std::vector<double> rhs(n, 0.0);
  diag.front() = 1.0;
  diag.back() = 1.0;
  auto pin = [&](std::size_t k, double value) {
    diag[k] = 1.0;
    rhs[k] = value;
    if (k > 0) lower[k - 1] = 0.0;
    if (k + 1 < n) upper[k] = 0.0;
  };
  pin(from, 0.0);
  pin(to, 1.0);
  const std::vector<double> u = solve_tridiagonal(lower, diag, upper, rhs);
  return 1.0 / energy(params, m, u, tag);
}

double series_resistance(const WeierstrassParams& params, int m, std::size_t from,
                         std::size_t to, Normalization tag) {
  require_vertex(params.nb, m, from);
  require_vertex(params.nb, m, to);
  const double edges = from > to ? static_cast<double>(from - to) : static_cast<double>(to - from);
  return edges / energy_form(params, m, tag).weight;
}

ResistanceDimension resistance_dimension(const WeierstrassParams& params) {
  const double threshold = params.lambda * params.nb;
  if (std::abs(threshold - 1.0) < 1e-12) {
    throw Error(Errc::constraint, "lambda*nb == 1: resistance dimension undefined");
  }
  const double denom = 5.0 - 2.0 * params.d_w;
  ResistanceDimension out;
  if (threshold > 1.0) {
    out.regime = ResistanceDimension::Regime::above_threshold;
    out.dimension = std::log(params.nb / params.lambda) / (denom * std::log(params.nb));
  } else {
    out.regime = ResistanceDimension::Regime::below_threshold;
    out.dimension = 2.0 / denom;
  }
  out.weyl_exponent = out.dimension / (out.dimension + 1.0);
  return out;
}

}  // namespace wlab
