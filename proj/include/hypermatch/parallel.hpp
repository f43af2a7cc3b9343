#ifndef HYPERMATCH_PARALLEL_HPP_
#define HYPERMATCH_PARALLEL_HPP_

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hypermatch {

// Worker cap: the HYPERMATCH_THREADS environment variable (a positive
// integer) wins, otherwise the hardware concurrency, never less than one.
inline int worker_count() {
  if (const char* env = std::getenv("HYPERMATCH_THREADS")) {
    const std::string raw = env;
    int v = 0;
    const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), v);
    if (ec != std::errc{} || ptr != raw.data() + raw.size() || v < 1)
      throw std::invalid_argument("HYPERMATCH_THREADS must be a positive integer, got '" +
                                  raw + "'");
    return v;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs fn(i) for i in [0, total) over a static partition into contiguous
// blocks, one thread per block.  fn must only touch state owned by index i,
// which keeps results independent of scheduling; the first exception in
// block order is rethrown.
template <typename Fn>
inline void parallel_for(std::size_t total, Fn&& fn, int workers = 0) {
  if (workers <= 0) workers = worker_count();
  const std::size_t use =
      std::min<std::size_t>(static_cast<std::size_t>(workers), std::max<std::size_t>(total, 1));
  if (use <= 1) {
    for (std::size_t i = 0; i < total; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(use);
  std::vector<std::thread> pool;
  pool.reserve(use);
  for (std::size_t w = 0; w < use; ++w) {
    const std::size_t lo = total * w / use;
    const std::size_t hi = total * (w + 1) / use;
    pool.emplace_back([&, w, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace hypermatch

#endif  // HYPERMATCH_PARALLEL_HPP_
