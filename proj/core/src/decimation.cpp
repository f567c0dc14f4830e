#include "wlab/decimation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "detail/refine.hpp"
#include "wlab/error.hpp"
#include "wlab/geometry.hpp"

namespace wlab {

namespace {

bool contains(const std::vector<double>& sorted, double v) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v - kEigenvalueTolerance);
  return it != sorted.end() && std::abs(*it - v) < kEigenvalueTolerance;
}

}  // namespace

DecimationStep decimate_step(const WeierstrassParams& params, double parent, int epsilon) {
  if (!(parent >= 0.0 && parent <= 4.0)) {
    throw Error(Errc::invalid_argument, "decimation parent must lie in [0,4]");
  }
  if (epsilon != 1 && epsilon != -1) throw Error(Errc::invalid_argument, "epsilon must be +1 or -1");
  using C = std::complex<double>;
  DecimationStep step;
  step.parent = parent;
  step.epsilon = epsilon;
  step.forbidden_parent = std::abs(parent - 2.0) < kEigenvalueTolerance;
  const C root = std::sqrt(C((parent - 2.0) * (parent - 2.0) - 4.0, 0.0));
  step.phi = (C(parent - 2.0, 0.0) - static_cast<double>(epsilon) * root) / 2.0;
  const double modulus = std::pow(std::abs(step.phi), 1.0 / params.nb);
  const double angle = std::arg(step.phi) / params.nb;
  for (int k = 0; k < params.nb; ++k) {
    const C z = std::polar(modulus, angle + 2.0 * std::numbers::pi * k / params.nb);
    DecimationChild child;
    child.exact = (z + 1.0) * (z + 1.0) / z;
    child.value = child.exact.real();
    child.root_index = k;
    child.real = std::abs(child.exact.imag()) <= kRealChildTolerance;
    if (child.real) child.parent_check = decimation_parent(params.nb, child.value);
    step.children.push_back(child);
  }
  return step;
}

double decimation_parent(int nb, double child) {
  using C = std::complex<double>;
  const C shift(child - 2.0, 0.0);
  const C z = (shift + std::sqrt(shift * shift - 4.0)) / 2.0;
  const C power = std::pow(z, nb);
  return 2.0 + (power + 1.0 / power).real();
}

std::vector<double> DecimationTree::values_at(int level) const {
  std::vector<double> out;
  for (const DecimationNode& n : nodes) {
    if (n.level == level) out.push_back(n.value);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QuotedMultiplicity> quoted_multiplicities(int nb, int level) {
  if (nb != 3 || level < 1) return {};
  const double pi = std::numbers::pi;
  const double c9 = std::cos(pi / 9.0);
  const double s9 = std::sin(pi / 9.0);
  if (level == 1) return {{1.0, "1", 2, 0}, {3.0, "3", 2, 0}};
  if (level == 2) {
    return {{1.0, "1", 5, 0},
            {3.0, "3", 5, 0},
            {2.0 + c9 + std::sqrt(3.0) * s9, "2+cos(pi/9)+sqrt(3)sin(pi/9)", 4, 0},
            {2.0 * (1.0 + c9), "2(1+cos(pi/9))", 4, 0}};
  }
  if (level == 3) {
    const double a = std::cos(pi / 27.0);
    const double b = std::cos(pi / 54.0);
    return {{1.0, "1", 8, 0},
            {3.0, "3", 8, 0},
            {4.0 * a * a, "4cos^2(pi/27)", 4, 0},
            {4.0 * b * b, "4cos^2(pi/54)", 4, 0}};
  }
  std::vector<QuotedMultiplicity> out{{1.0, "1", 2, 0}, {3.0, "3", 2, 0}};
  if (level == 4) {
    const double c = std::cos(pi / 81.0);
    const auto branch = static_cast<std::size_t>(1) << (level - 1);
    out.push_back({4.0 * c * c, "4cos^2(pi/81)", branch, 0});
    out.push_back({2.0 * (1.0 + c), "2(1+cos(pi/81))", branch, 0});
  }
  return out;
}

std::vector<QuotedContinuedValue> quoted_continued_values() {
  std::vector<QuotedContinuedValue> out;
  for (int level = 2; level <= 4; ++level) {
    for (const QuotedMultiplicity& q : quoted_multiplicities(3, level)) {
      if (q.label != "1" && q.label != "3") out.push_back({level, q.label, q.value});
    }
  }
  return out;
}

DecimationTree decimation_tree(const WeierstrassParams& params, int depth, const Budget& budget) {
  if (depth < 1) throw Error(Errc::invalid_argument, "decimation depth must be >= 1");
  DecimationTree tree;

  auto reconcile = [&](int level, const std::vector<double>& continued) {
    LevelReconciliation r;
    r.level = level;
    r.continued = continued;
    if (level > budget.max_eigen_level) return r;
    const Spectrum direct = direct_spectrum(params, level, budget);
    r.checked = true;
    r.direct_total = direct.total_multiplicity();
    for (const SpectrumEntry& e : direct.entries) {
      if (!contains(continued, e.value)) r.newborn.push_back(e.value);
    }
    const std::vector<double> direct_values = direct.values();
    for (double v : continued) {
      if (!contains(direct_values, v)) r.spurious.push_back(v);
    }
    r.quoted = quoted_multiplicities(params.nb, level);
    for (QuotedMultiplicity& q : r.quoted) {
      q.observed = direct.multiplicity_of(q.value);
      r.quoted_total += q.quoted;
    }
    return r;
  };

  tree.levels.push_back(reconcile(1, {}));
  if (!tree.levels.back().checked) {
    throw Error(Errc::size_limit, "level 1 exceeds the eigensolve cap");
  }
  for (double v : tree.levels.back().newborn) tree.nodes.push_back({v, 1, std::nullopt, 0, -1, true});

  std::vector<std::size_t> frontier(tree.nodes.size());
  for (std::size_t k = 0; k < frontier.size(); ++k) frontier[k] = k;

  for (int level = 2; level <= depth; ++level) {
    std::vector<std::size_t> next;
    std::vector<double> seen;  // sorted continued values at this level
    for (std::size_t parent_index : frontier) {
      const double parent_value = tree.nodes[parent_index].value;
      for (int epsilon : {1, -1}) {
        for (const DecimationChild& child : decimate_step(params, parent_value, epsilon).children) {
          if (!child.real || child.value <= 0.0 || child.value >= 4.0) continue;
          if (contains(seen, child.value)) continue;
          seen.insert(std::upper_bound(seen.begin(), seen.end(), child.value), child.value);
          tree.nodes.push_back({child.value, level, parent_index, epsilon, child.root_index, false});
          next.push_back(tree.nodes.size() - 1);
        }
      }
    }
    tree.levels.push_back(reconcile(level, seen));
    for (double v : tree.levels.back().newborn) {
      tree.nodes.push_back({v, level, std::nullopt, 0, -1, true});
      next.push_back(tree.nodes.size() - 1);
    }
    std::sort(next.begin(), next.end(), [&](std::size_t a, std::size_t b) {
      return tree.nodes[a].value < tree.nodes[b].value;
    });
    frontier.swap(next);
  }
  return tree;
}

std::vector<double> extend_eigenfunction(const WeierstrassParams& params, int m,
                                         std::span<const double> parent, double eigenvalue) {
  if (m < 1) throw Error(Errc::invalid_argument, "eigenfunction extension needs level >= 1");
  if (parent.size() != chain_vertex_count(params.nb, m - 1)) {
    throw Error(Errc::invalid_argument, "parent eigenfunction has the wrong number of values");
  }
  return detail::refine_segments(params.nb, parent, eigenvalue);
}

}  // namespace wlab
