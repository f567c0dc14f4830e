#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <thread>
#include <vector>

namespace wlab::detail {

/// Splits [0, n) into contiguous chunks, evaluates `chunk(begin, end)` on each
/// (possibly concurrently) and returns the per-chunk results in chunk order,
/// so any subsequent reduction is deterministic.
template <typename Fn>
auto map_chunks(std::size_t n, Fn chunk, std::size_t min_chunk = 4096) {
  using Result = decltype(chunk(std::size_t{0}, std::size_t{0}));
  const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  const std::size_t parts = std::clamp<std::size_t>(n / std::max<std::size_t>(1, min_chunk), 1, hw);
  std::vector<Result> out;
  out.reserve(parts);
  if (parts == 1) {
    out.push_back(chunk(0, n));
    return out;
  }
  std::vector<std::future<Result>> pending;
  pending.reserve(parts);
  for (std::size_t p = 0; p < parts; ++p) {
    const std::size_t begin = n * p / parts;
    const std::size_t end = n * (p + 1) / parts;
    pending.push_back(std::async(std::launch::async, chunk, begin, end));
  }
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

}  // namespace wlab::detail
