#include "wlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "detail/parallel.hpp"
#include "wlab/energy.hpp"
#include "wlab/error.hpp"

namespace wlab {

namespace {

void require_eigen_level(int m, const Budget& budget) {
  if (m < 1) throw Error(Errc::invalid_argument, "Dirichlet spectrum needs level >= 1");
  if (m > budget.max_eigen_level) {
    throw Error(Errc::size_limit, "level " + std::to_string(m) + " exceeds the eigensolve cap " +
                                      std::to_string(budget.max_eigen_level));
  }
}

}  // namespace

Eigen::SparseMatrix<double> DirichletMatrix::sparse() const {
  std::vector<Eigen::Triplet<double>> entries;
  for (const Block& b : blocks) {
    const auto n = static_cast<std::size_t>(b.diagonal.size());
    for (std::size_t k = 0; k < n; ++k) {
      const auto row = static_cast<Eigen::Index>(b.first_row + k);
      entries.emplace_back(row, row, b.diagonal[static_cast<Eigen::Index>(k)]);
      if (k + 1 < n) {
        const double off = b.off_diagonal[static_cast<Eigen::Index>(k)];
        entries.emplace_back(row, row + 1, off);
        entries.emplace_back(row + 1, row, off);
      }
    }
  }
  const auto n = static_cast<Eigen::Index>(size());
  Eigen::SparseMatrix<double> out(n, n);
  out.setFromTriplets(entries.begin(), entries.end());
  return out;
}

Eigen::MatrixXd DirichletMatrix::dense() const { return Eigen::MatrixXd(sparse()); }

DirichletMatrix dirichlet_matrix(const LevelGraph& graph) {
  if (graph.level < 1) throw Error(Errc::invalid_argument, "Dirichlet matrix needs level >= 1");
  DirichletMatrix a;
  a.level = graph.level;
  std::vector<long> row_of(graph.size(), -1);
  for (std::size_t k = 0; k < graph.size(); ++k) {
    if (!graph.is_boundary(k)) {
      row_of[k] = static_cast<long>(a.chain_positions.size());
      a.chain_positions.push_back(k);
    }
  }
  // Rows are chain ordered, so interior neighbours of a row sit at row +- 1 and
  // every block is a maximal run of chain-adjacent interior vertices.
  std::vector<double> diag;
  std::vector<double> off;
  std::size_t first_row = 0;
  auto flush = [&](std::size_t next_first) {
    if (!diag.empty()) {
      DirichletMatrix::Block b;
      b.first_row = first_row;
      b.diagonal = Eigen::Map<const Eigen::VectorXd>(diag.data(), static_cast<Eigen::Index>(diag.size()));
      b.off_diagonal = Eigen::Map<const Eigen::VectorXd>(off.data(), static_cast<Eigen::Index>(off.size()));
      a.blocks.push_back(std::move(b));
    }
    diag.clear();
    off.clear();
    first_row = next_first;
  };
  for (std::size_t row = 0; row < a.chain_positions.size(); ++row) {
    const std::size_t k = a.chain_positions[row];
    const std::vector<std::size_t> nbrs = graph.neighbours(k);
    diag.push_back(static_cast<double>(nbrs.size()));
    const bool next_is_neighbour =
        row + 1 < a.chain_positions.size() &&
        std::find(nbrs.begin(), nbrs.end(), a.chain_positions[row + 1]) != nbrs.end();
    if (next_is_neighbour) {
      off.push_back(-1.0);
    } else {
      flush(row + 1);
    }
  }
  flush(a.chain_positions.size());
  return a;
}

DirichletMatrix dirichlet_matrix(const WeierstrassParams& params, int m, const Budget& budget) {
  return dirichlet_matrix(vertex_chain(params, m, budget));
}

std::size_t Spectrum::total_multiplicity() const noexcept {
  std::size_t total = 0;
  for (const SpectrumEntry& e : entries) total += e.multiplicity;
  return total;
}

std::vector<double> Spectrum::values() const {
  std::vector<double> out;
  out.reserve(entries.size());
  for (const SpectrumEntry& e : entries) out.push_back(e.value);
  return out;
}

std::size_t Spectrum::multiplicity_of(double value) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), value - kEigenvalueTolerance,
                             [](const SpectrumEntry& e, double v) { return e.value < v; });
  if (it != entries.end() && std::abs(it->value - value) < kEigenvalueTolerance) {
    return it->multiplicity;
  }
  return 0;
}

Spectrum group_eigenvalues(std::vector<double> values, int level, Provenance provenance,
                           double tolerance) {
  std::sort(values.begin(), values.end());
  Spectrum s;
  s.level = level;
  s.provenance = provenance;
  std::size_t k = 0;
  while (k < values.size()) {
    const double anchor = values[k];
    double sum = 0.0;
    std::size_t count = 0;
    while (k < values.size() && values[k] - anchor < tolerance) {
      sum += values[k];
      ++count;
      ++k;
    }
    s.entries.push_back({sum / static_cast<double>(count), count});
  }
  return s;
}

Spectrum direct_spectrum(const WeierstrassParams& params, int m, const Budget& budget,
                         EigenMethod method) {
  require_eigen_level(m, budget);
  const DirichletMatrix a = dirichlet_matrix(params, m, budget);
  std::vector<double> values;
  values.reserve(a.size());
  if (method == EigenMethod::dense) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a.dense(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error(Errc::internal, "dense eigensolve failed");
    values.assign(solver.eigenvalues().begin(), solver.eigenvalues().end());
  } else {
    const auto per_block = detail::map_chunks(a.blocks.size(), [&](std::size_t begin, std::size_t end) {
      std::vector<double> out;
      for (std::size_t b = begin; b < end; ++b) {
        const DirichletMatrix::Block& block = a.blocks[b];
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
        solver.computeFromTridiagonal(block.diagonal, block.off_diagonal, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) throw Error(Errc::internal, "tridiagonal eigensolve failed");
        out.insert(out.end(), solver.eigenvalues().begin(), solver.eigenvalues().end());
      }
      return out;
    }, 1);
    for (const auto& chunk : per_block) values.insert(values.end(), chunk.begin(), chunk.end());
  }
  return group_eigenvalues(std::move(values), m, Provenance::direct);
}

Spectrum oracle_spectrum(const WeierstrassParams& params, int m) {
  if (m < 1) throw Error(Errc::invalid_argument, "Dirichlet spectrum needs level >= 1");
  const std::size_t n = checked_pow(params.nb, m);
  std::vector<double> values;
  values.reserve((n - 1) * static_cast<std::size_t>(params.nb - 1));
  for (std::size_t k = 1; k < n; ++k) {
    const double v = 2.0 - 2.0 * std::cos(static_cast<double>(k) * std::numbers::pi / static_cast<double>(n));
    for (int copy = 0; copy < params.nb - 1; ++copy) values.push_back(v);
  }
  return group_eigenvalues(std::move(values), m, Provenance::oracle);
}

double eigen_residual(int nb, int m, std::span<const double> u, double eigenvalue) {
  double worst = 0.0;
  for (std::size_t k = 1; k + 1 < u.size(); ++k) {
    if (is_boundary_vertex(nb, m, k)) continue;
    worst = std::max(worst, std::abs(laplacian_apply(nb, m, u, k) + eigenvalue * u[k]));
  }
  return worst;
}

double counting_factor(const WeierstrassParams& params, int m, CountingScale scale) {
  if (scale == CountingScale::none) return 1.0;
  return params.eta * std::pow(static_cast<double>(params.nb), m);
}

std::size_t count_eigenvalues(const Spectrum& spectrum, double x, double factor) {
  std::size_t count = 0;
  for (const SpectrumEntry& e : spectrum.entries) {
    if (e.value * factor > x) break;
    count += e.multiplicity;
  }
  return count;
}

std::size_t counting_function(const WeierstrassParams& params, int m, double x,
                              CountingScale scale, const Budget& budget) {
  return count_eigenvalues(direct_spectrum(params, m, budget), x,
                           counting_factor(params, m, scale));
}

WeylAnalysis weyl_analysis(const WeierstrassParams& params, int m_first, int m_last,
                           int sample_count, const Budget& budget) {
  if (m_first < 1 || m_last <= m_first) {
    throw Error(Errc::invalid_argument, "Weyl analysis needs two or more levels starting at 1");
  }
  if (sample_count < 2) throw Error(Errc::invalid_argument, "Weyl analysis needs two or more samples");
  WeylAnalysis out;
  std::vector<Spectrum> spectra;
  for (int m = m_first; m <= m_last; ++m) {
    spectra.push_back(direct_spectrum(params, m, budget));
    WeylRow row;
    row.level = m;
    row.total = spectra.back().total_multiplicity();
    row.log_count_per_level = std::log(static_cast<double>(row.total)) / m;
    if (!out.rows.empty()) {
      row.log_increment = std::log(static_cast<double>(row.total) / static_cast<double>(out.rows.back().total));
    }
    out.rows.push_back(row);
  }

  const double log_nb = std::log(static_cast<double>(params.nb));
  auto decade = [&](double top, int k) {
    const double t = static_cast<double>(k) / (sample_count - 1);
    return top * std::pow(10.0, t - 1.0);
  };

  const Spectrum& fine = spectra.back();
  const double fine_factor = counting_factor(params, m_last, CountingScale::paper);
  const double fine_top = 4.0 * fine_factor;
  for (int k = 0; k < sample_count; ++k) {
    WeylSample s;
    s.x = decade(fine_top, k);
    s.phase = std::fmod(std::log(s.x), log_nb);
    s.ratio = static_cast<double>(count_eigenvalues(fine, s.x, fine_factor)) / s.x;
    out.samples.push_back(s);
  }

  const Spectrum& coarse = spectra[spectra.size() - 2];
  const double coarse_factor = counting_factor(params, m_last - 1, CountingScale::paper);
  const double coarse_top = 4.0 * coarse_factor;
  for (int k = 0; k < sample_count; ++k) {
    WeylOverlay o;
    o.x = decade(coarse_top, k);
    o.coarse = static_cast<double>(count_eigenvalues(coarse, o.x, coarse_factor)) / o.x;
    const double scaled = params.nb * o.x;
    o.fine = static_cast<double>(count_eigenvalues(fine, scaled, fine_factor)) / scaled;
    o.relative_difference = o.coarse == 0.0 ? (o.fine == 0.0 ? 0.0 : 1.0)
                                            : std::abs(o.fine - o.coarse) / o.coarse;
    out.max_overlay_difference = std::max(out.max_overlay_difference, o.relative_difference);
    out.overlay.push_back(o);
  }
  return out;
}

std::vector<double> renormalization_sequence(const WeierstrassParams& params, int m_last) {
  std::vector<double> out;
  const double step = std::pow(static_cast<double>(params.nb), 5.0 - 2.0 * params.d_w);
  double term = 1.0 / (params.eta * params.eta);
  for (int m = 0; m <= m_last; ++m) {
    out.push_back(term);
    term *= step;
  }
  return out;
}

}  // namespace wlab
