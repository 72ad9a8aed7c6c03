#include "entropart/summation.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace entropart {
namespace {

std::atomic<unsigned> g_threads{0};

double pairwise_strided(const double* data, std::size_t n, std::size_t stride) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += data[i * stride];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_strided(data, half, stride) +
         pairwise_strided(data + half * stride, n - half, stride);
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  return pairwise_strided(values.data(), values.size(), 1);
}

void set_worker_threads(unsigned threads) { g_threads = threads; }

unsigned worker_threads() {
  const unsigned t = g_threads.load();
  if (t != 0) return t;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<double> parallel_chunked_sum(
    std::size_t count, std::size_t width,
    const std::function<void(std::size_t, std::size_t, std::span<double>)>& fill) {
  std::vector<double> result(width, 0.0);
  if (count == 0 || width == 0) return result;

  const std::size_t n_chunks = (count + kReductionChunk - 1) / kReductionChunk;
  std::vector<double> chunk_sums(n_chunks * width, 0.0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    std::vector<double> buffer(kReductionChunk * width);
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      const std::size_t begin = c * kReductionChunk;
      const std::size_t end = std::min(count, begin + kReductionChunk);
      const std::size_t n = end - begin;
      try {
        std::span<double> out(buffer.data(), n * width);
        std::fill(out.begin(), out.end(), 0.0);
        fill(begin, end, out);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n_chunks;
        return;
      }
      for (std::size_t k = 0; k < width; ++k)
        chunk_sums[c * width + k] = pairwise_strided(buffer.data() + k, n, width);
    }
  };

  const unsigned n_threads =
      static_cast<unsigned>(std::min<std::size_t>(worker_threads(), n_chunks));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t k = 0; k < width; ++k)
    result[k] = pairwise_strided(chunk_sums.data() + k, n_chunks, width);
  return result;
}

}  // namespace entropart
