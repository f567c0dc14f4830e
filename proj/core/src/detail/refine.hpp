#pragma once

#include <span>
#include <vector>

namespace wlab::detail {

/// Refines chain values from level m-1 to level m: every parent edge gets
/// nb-1 new interior vertices solving (2 - eigenvalue) u_k = u_{k-1} + u_{k+1}
/// with the parent values as segment endpoints. eigenvalue = 0 gives the
/// harmonic (linear) extension. Throws Errc::singular when the local segment
/// system is singular.
std::vector<double> refine_segments(int nb, std::span<const double> parent, double eigenvalue);

/// Local segment matrices become singular at 2 - 2 cos(k pi / nb); a
/// determinant below this is treated as singular.
inline constexpr double kSingularDeterminant = 1e-9;

}  // namespace wlab::detail
