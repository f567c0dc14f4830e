#include "detail/refine.hpp"

#include <cmath>
#include <string>

#include "wlab/error.hpp"

namespace wlab::detail {

std::vector<double> refine_segments(int nb, std::span<const double> parent, double eigenvalue) {
  if (parent.size() < 2) throw Error(Errc::invalid_argument, "parent chain needs two or more values");
  const int unknowns = nb - 1;
  const double a = 2.0 - eigenvalue;
  // det[k] is the determinant of the k x k path matrix (a on the diagonal, -1 off it).
  std::vector<double> det(static_cast<std::size_t>(unknowns) + 1);
  det[0] = 1.0;
  if (unknowns >= 1) det[1] = a;
  for (int k = 2; k <= unknowns; ++k) det[k] = a * det[k - 1] - det[k - 2];
  const double full = det[static_cast<std::size_t>(unknowns)];
  if (std::abs(full) < kSingularDeterminant) {
    throw Error(Errc::singular, "forbidden value: segment system singular at eigenvalue " +
                                    std::to_string(eigenvalue));
  }

  const std::size_t edges = parent.size() - 1;
  const auto step = static_cast<std::size_t>(nb);
  std::vector<double> out(edges * step + 1);
  for (std::size_t e = 0; e < edges; ++e) {
    const double left = parent[e];
    const double right = parent[e + 1];
    out[e * step] = left;
    for (int i = 1; i <= unknowns; ++i) {
      const double from_right = i >= 2 ? det[static_cast<std::size_t>(i - 1)] : 1.0;
      const double from_left = det[static_cast<std::size_t>(unknowns - i)];
      out[e * step + static_cast<std::size_t>(i)] = (left * from_left + right * from_right) / full;
    }
  }
  out.back() = parent.back();
  return out;
}

}  // namespace wlab::detail
