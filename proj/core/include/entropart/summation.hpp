#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace entropart {

/// Recursive pairwise summation; O(log n) error growth.
double pairwise_sum(std::span<const double> values);

/// Number of worker threads used by `parallel_chunked_sum`. Zero selects
/// std::thread::hardware_concurrency(). Results never depend on this value.
void set_worker_threads(unsigned threads);
unsigned worker_threads();

/// Chunk size of the deterministic reduction (points per chunk).
inline constexpr std::size_t kReductionChunk = 2048;

/// Evaluates `fill(begin, end, buffer)` over fixed chunks of [0, count).
/// `fill` writes `width` values per index into `buffer` (index-major,
/// buffer[(i - begin) * width + k]). Each component is reduced pairwise
/// inside a chunk, then pairwise across chunks, so the result is
/// bit-identical for any thread count.
std::vector<double> parallel_chunked_sum(
    std::size_t count, std::size_t width,
    const std::function<void(std::size_t, std::size_t, std::span<double>)>& fill);

}  // namespace entropart
