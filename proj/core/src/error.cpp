#include "wlab/error.hpp"

namespace wlab {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::constraint: return "constraint";
    case Errc::out_of_range: return "out_of_range";
    case Errc::size_limit: return "size_limit";
    case Errc::singular: return "singular";
    case Errc::internal: return "internal";
  }
  return "internal";
}

}  // namespace wlab
