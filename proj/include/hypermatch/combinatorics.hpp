#ifndef HYPERMATCH_COMBINATORICS_HPP_
#define HYPERMATCH_COMBINATORICS_HPP_

#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace hypermatch {

// Exact binomial coefficient over uint64. Throws std::overflow_error if the
// value (or any prefix product C(a-b+i, i), which is monotone in i) exceeds
// the uint64 range. Intermediates are exact: after step i the accumulator
// equals C(a-b+i, i), an integer, so every division is exact.
inline std::uint64_t binom(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= b; ++i) {
    r = r * (a - b + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("binom: value exceeds uint64 range");
  }
  return static_cast<std::uint64_t>(r);
}

// Signed convenience wrapper: any negative argument or b > a yields 0.
inline long long binom_ll(long long a, long long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  std::uint64_t v = binom(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  if (v > static_cast<std::uint64_t>(std::numeric_limits<long long>::max()))
    throw std::overflow_error("binom_ll: value exceeds long long range");
  return static_cast<long long>(v);
}

// Advances a strictly increasing 1-based k-subset of {1..n} to its colex
// successor in place. Returns false (leaving the input untouched) when the
// input is the colex-maximal subset {n-k+1..n}.
inline bool next_k_subset(std::span<int> a, int n) {
  const int k = static_cast<int>(a.size());
  for (int i = 0; i < k; ++i) {
    const int limit = (i + 1 < k) ? a[i + 1] - 1 : n;
    if (a[i] < limit) {
      ++a[i];
      std::iota(a.begin(), a.begin() + i, 1);
      return true;
    }
  }
  return false;
}

// Calls fn on every k-subset of {1..n} in colex order.
template <typename Fn>
inline void for_each_k_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> a(static_cast<std::size_t>(k));
  std::iota(a.begin(), a.end(), 1);
  do {
    fn(std::span<const int>(a));
  } while (next_k_subset(a, n));
}

// Colex rank of a strictly increasing 1-based k-subset: sum of C(a[i]-1, i+1).
// Ranks enumerate k-subsets of any ground set in colex order starting at 0.
inline std::uint64_t colex_rank(std::span<const int> a) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    r += binom(static_cast<std::uint64_t>(a[i] - 1), i + 1);
  return r;
}

// Colex comparison of equal-size sorted tuples: compare coordinates from the
// last down; the first difference decides.
inline bool colex_less(std::span<const int> a, std::span<const int> b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace hypermatch

#endif  // HYPERMATCH_COMBINATORICS_HPP_
