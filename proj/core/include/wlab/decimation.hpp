#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wlab/params.hpp"
#include "wlab/spectral.hpp"

namespace wlab {

/// A child is real when its imaginary part is at most this.
inline constexpr double kRealChildTolerance = 1e-10;

struct DecimationChild {
  std::complex<double> exact;  // (z + 1)^2 / z
  double value = 0.0;          // real part
  int root_index = 0;          // which nb-th root of phi
  bool real = false;
  double parent_check = 0.0;   // decimation_parent(value), valid when real
};

struct DecimationStep {
  double parent = 0.0;
  int epsilon = 1;
  std::complex<double> phi;  // (-2 + L - eps sqrt((L - 2)^2 - 4)) / 2
  bool forbidden_parent = false;  // parent is the excluded value 2
  std::vector<DecimationChild> children;
};

/// All nb children of `parent` for one sign choice epsilon in {+1, -1}.
DecimationStep decimate_step(const WeierstrassParams& params, double parent, int epsilon);

/// Forward map child -> parent: with z + 1/z = child - 2, parent = 2 + z^nb + z^{-nb}.
double decimation_parent(int nb, double child);

struct DecimationNode {
  double value = 0.0;
  int level = 0;
  std::optional<std::size_t> parent;  // index into DecimationTree::nodes
  int epsilon = 0;                    // 0 for newborn nodes
  int root_index = -1;                // -1 for newborn nodes
  bool newborn = false;
};

/// A quoted multiplicity next to the one the eigensolve gives.
struct QuotedMultiplicity {
  double value = 0.0;
  std::string label;
  std::size_t quoted = 0;
  std::size_t observed = 0;
};

struct LevelReconciliation {
  int level = 0;
  bool checked = false;  // false when the level exceeds the eigensolve cap
  std::vector<double> continued;
  std::vector<double> newborn;   // direct values not produced by decimation
  std::vector<double> spurious;  // decimation values missing from the direct spectrum
  std::size_t direct_total = 0;
  std::size_t quoted_total = 0;  // sum of quoted multiplicities, 0 when none are quoted
  std::vector<QuotedMultiplicity> quoted;

  [[nodiscard]] bool complete() const noexcept { return checked && spurious.empty(); }
};

struct DecimationTree {
  std::vector<DecimationNode> nodes;
  std::vector<LevelReconciliation> levels;  // index 0 is level 1

  [[nodiscard]] std::vector<double> values_at(int level) const;
};

/// Seeds level 1 with the direct spectrum and continues every value through
/// all 2 nb branches, adding the direct values that decimation does not reach
/// as newborn nodes.
DecimationTree decimation_tree(const WeierstrassParams& params, int depth, const Budget& budget = {});

/// Quoted multiplicities for nb = 3 at `level` (empty otherwise).
std::vector<QuotedMultiplicity> quoted_multiplicities(int nb, int level);

/// Closed-form continued values for nb = 3 at levels 2..4.
struct QuotedContinuedValue {
  int level = 0;
  std::string label;
  double value = 0.0;
};

std::vector<QuotedContinuedValue> quoted_continued_values();

/// Fills the new vertices of each refined segment from an eigenfunction on
/// V_{m-1} so that Delta_m u = -eigenvalue u there. Throws Errc::singular when
/// the eigenvalue is a forbidden value of the segment system.
std::vector<double> extend_eigenfunction(const WeierstrassParams& params, int m,
                                         std::span<const double> parent, double eigenvalue);

}  // namespace wlab
