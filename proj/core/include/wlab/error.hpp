#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wlab {

/// Failure categories. The CLI maps every category except `internal` to a
/// validation exit code.
enum class Errc {
  invalid_argument,  // malformed input (range, size mismatch)
  constraint,        // a parameter constraint such as lambda*nb > 1
  out_of_range,      // index or letter outside its alphabet
  size_limit,        // level exceeds the configured budget
  singular,          // local linear system degenerates (forbidden value)
  internal,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace wlab
