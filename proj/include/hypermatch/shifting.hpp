#ifndef HYPERMATCH_SHIFTING_HPP_
#define HYPERMATCH_SHIFTING_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

struct ShiftReport {
  int i = 0;
  int j = 0;
  std::size_t moved = 0;
  Hypergraph result;
};

// sum over edges of the sum of vertex ids; every replaced edge lowers it by
// exactly j - i, which bounds the number of effective shifts
inline long long shift_potential(const Hypergraph& g) {
  long long p = 0;
  for (std::size_t i = 0; i < g.m(); ++i)
    for (Vertex v : g.edge(i)) p += v;
  return p;
}

// every edge holding j but not i moves to (e - {j}) + {i} unless that set is
// already an edge; replacements are simultaneous against the input edge set
inline ShiftReport shift_ij(const Hypergraph& g, int i, int j) {
  if (i >= j) throw std::invalid_argument("shift: requires i < j");
  if (i < 1 || j > g.n()) throw std::invalid_argument("shift: vertex id out of range");
  std::vector<EdgeTuple> out;
  out.reserve(g.m());
  std::size_t moved = 0;
  for (std::size_t id = 0; id < g.m(); ++id) {
    EdgeTuple e = g.edge_tuple(id);
    const bool has_j = std::find(e.begin(), e.end(), j) != e.end();
    const bool has_i = std::find(e.begin(), e.end(), i) != e.end();
    if (has_j && !has_i) {
      EdgeTuple f;
      f.reserve(e.size());
      for (Vertex v : e)
        if (v != j) f.push_back(v);
      f.push_back(i);
      std::sort(f.begin(), f.end());
      if (!g.contains(f)) {
        out.push_back(std::move(f));
        ++moved;
        continue;
      }
    }
    out.push_back(std::move(e));
  }
  ShiftReport r;
  r.i = i;
  r.j = j;
  r.moved = moved;
  r.result = Hypergraph::build(g.n(), g.k(), out);
  if (r.result.m() != g.m())
    throw std::logic_error("shift: edge count changed");
  return r;
}

enum class SweepOrder { lexicographic, reverse };

// fixpoint of all (i,j)-shifts, reached by full sweeps over the pairs until a
// sweep moves nothing; the id-sum potential must drop by moved*(j-i) per
// application, which is checked and also forces termination
inline Hypergraph shift_closure(const Hypergraph& g,
                                SweepOrder order = SweepOrder::lexicographic,
                                std::size_t* total_moves = nullptr,
                                std::size_t* sweeps = nullptr) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= g.n(); ++i)
    for (int j = i + 1; j <= g.n(); ++j) pairs.emplace_back(i, j);
  if (order == SweepOrder::reverse) std::reverse(pairs.begin(), pairs.end());

  Hypergraph cur = g;
  std::size_t moves = 0, sweep_count = 0;
  for (;;) {
    ++sweep_count;
    std::size_t sweep_moves = 0;
    for (auto [i, j] : pairs) {
      const long long before = shift_potential(cur);
      ShiftReport r = shift_ij(cur, i, j);
      const long long after = shift_potential(r.result);
      if (after != before - static_cast<long long>(r.moved) * (j - i))
        throw std::logic_error("shift_closure: potential did not drop as required");
      sweep_moves += r.moved;
      cur = std::move(r.result);
    }
    moves += sweep_moves;
    if (sweep_moves == 0) break;
  }
  if (total_moves) *total_moves = moves;
  if (sweeps) *sweeps = sweep_count;
  return cur;
}

// coordinatewise comparison of equal-arity sorted tuples
inline bool dominance_leq(std::span<const Vertex> f, std::span<const Vertex> e) {
  if (f.size() != e.size()) throw std::invalid_argument("dominance: arity mismatch");
  for (std::size_t t = 0; t < f.size(); ++t)
    if (f[t] > e[t]) return false;
  return true;
}

// down-set test under dominance; it suffices to check single-step decrements:
// lowering one coordinate by one (where the slot below is free) stays inside
inline bool is_shifted(const Hypergraph& g) {
  if (g.has_masks()) {
    // colex order on equal-size sets is numeric order on masks, so the mask
    // array is sorted and membership is a numeric binary search
    const auto masks = g.edge_masks();
    for (std::size_t id = 0; id < g.m(); ++id) {
      const std::uint64_t em = masks[id];
      for (Vertex v : g.edge(id)) {
        if (v == 1) continue;
        if ((em >> (v - 2)) & 1) continue;  // slot below occupied
        const std::uint64_t probe =
            (em & ~(std::uint64_t{1} << (v - 1))) | (std::uint64_t{1} << (v - 2));
        if (!std::binary_search(masks.begin(), masks.end(), probe)) return false;
      }
    }
    return true;
  }
  EdgeTuple f;
  for (std::size_t id = 0; id < g.m(); ++id) {
    const auto e = g.edge(id);
    for (std::size_t t = 0; t < e.size(); ++t) {
      const Vertex v = e[t];
      if (v == 1) continue;
      if (t > 0 && e[t - 1] == v - 1) continue;
      f.assign(e.begin(), e.end());
      f[t] = v - 1;
      if (!g.contains(f)) return false;
    }
  }
  return true;
}

enum class Color { red, blue };

struct DisjointPair {
  std::vector<int> first;
  std::vector<int> second;
  Color first_color = Color::red;
  Color second_color = Color::blue;
};

struct Monochrome {
  Color color = Color::red;
};

using ColoringWitness = std::variant<DisjointPair, Monochrome>;

// dichotomy witness for a total 2-coloring of the (k-1)-subsets of {1..n},
// n >= 2k-1: the first (in colex pair order) disjoint pair with different
// colors, or the certificate that only one color occurs
inline ColoringWitness two_coloring_witness(int n, int k, std::span<const Color> colors) {
  if (k < 2) throw std::invalid_argument("two_coloring_witness: requires k >= 2");
  if (n < 2 * k - 1) throw std::invalid_argument("two_coloring_witness: requires n >= 2k-1");
  const std::uint64_t expected = binom(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k - 1));
  if (colors.size() != expected)
    throw std::invalid_argument("two_coloring_witness: coloring must cover every subset");

  std::vector<std::vector<int>> subs;
  subs.reserve(colors.size());
  for_each_k_subset(n, k - 1, [&](std::span<const int> a) {
    subs.emplace_back(a.begin(), a.end());
  });

  bool bichromatic = false;
  for (std::size_t a = 0; a + 1 < subs.size(); ++a) {
    for (std::size_t b = a + 1; b < subs.size(); ++b) {
      if (colors[a] == colors[b]) continue;
      bichromatic = true;
      bool disjoint = true;
      for (int v : subs[a])
        if (std::find(subs[b].begin(), subs[b].end(), v) != subs[b].end()) {
          disjoint = false;
          break;
        }
      if (disjoint)
        return DisjointPair{subs[a], subs[b], colors[a], colors[b]};
    }
  }
  if (bichromatic)
    throw std::logic_error("two_coloring_witness: bichromatic coloring without a disjoint pair");
  return Monochrome{colors.empty() ? Color::red : colors[0]};
}

// rank-indexed disjointness table for fast repeated dichotomy queries over
// all colorings of the (k-1)-subsets; requires at most 64 subsets
class TwoColoringIndex {
 public:
  TwoColoringIndex(int n, int k) {
    if (k < 2) throw std::invalid_argument("TwoColoringIndex: requires k >= 2");
    if (n < 2 * k - 1) throw std::invalid_argument("TwoColoringIndex: requires n >= 2k-1");
    const std::uint64_t r = binom(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k - 1));
    if (r > 64) throw std::invalid_argument("TwoColoringIndex: more than 64 subsets");
    for_each_k_subset(n, k - 1, [&](std::span<const int> a) {
      subsets_.emplace_back(a.begin(), a.end());
    });
    disj_higher_.assign(subsets_.size(), 0);
    for (std::size_t a = 0; a < subsets_.size(); ++a)
      for (std::size_t b = a + 1; b < subsets_.size(); ++b) {
        bool disjoint = true;
        for (int v : subsets_[a])
          if (std::find(subsets_[b].begin(), subsets_[b].end(), v) != subsets_[b].end()) {
            disjoint = false;
            break;
          }
        if (disjoint) disj_higher_[a] |= std::uint64_t{1} << b;
      }
  }

  int count() const { return static_cast<int>(subsets_.size()); }

  std::span<const std::vector<int>> subsets() const { return subsets_; }

  std::uint64_t full_mask() const {
    const std::size_t r = subsets_.size();
    return r == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
  }

  // bit r of red_mask set means subset rank r is red; result is the first
  // (lowest a, then lowest b) disjoint differently-colored pair
  std::optional<std::pair<int, int>> first_bichromatic_disjoint(std::uint64_t red_mask) const {
    const std::uint64_t blue_mask = full_mask() & ~red_mask;
    for (std::size_t a = 0; a < subsets_.size(); ++a) {
      const std::uint64_t other = ((red_mask >> a) & 1) ? blue_mask : red_mask;
      const std::uint64_t hits = disj_higher_[a] & other;
      if (hits)
        return std::make_pair(static_cast<int>(a), std::countr_zero(hits));
    }
    return std::nullopt;
  }

 private:
  std::vector<std::vector<int>> subsets_;
  std::vector<std::uint64_t> disj_higher_;
};

}  // namespace hypermatch

#endif  // HYPERMATCH_SHIFTING_HPP_
