#ifndef HYPERMATCH_TESTS_ORACLES_HPP_
#define HYPERMATCH_TESTS_ORACLES_HPP_

// Reference implementations kept deliberately naive: plain exhaustive
// recursion, no bounds, no memoization. The library must agree with these.

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "hypermatch/hypergraph.hpp"

namespace oracles {

inline int naive_mu(const hypermatch::Hypergraph& g) {
  int best = 0;
  std::vector<char> used(static_cast<std::size_t>(g.n()) + 1, 0);
  auto rec = [&](auto&& self, std::size_t from, int have) -> void {
    best = std::max(best, have);
    for (std::size_t i = from; i < g.m(); ++i) {
      bool free = true;
      for (auto v : g.edge(i))
        if (used[static_cast<std::size_t>(v)]) { free = false; break; }
      if (!free) continue;
      for (auto v : g.edge(i)) used[static_cast<std::size_t>(v)] = 1;
      self(self, i + 1, have + 1);
      for (auto v : g.edge(i)) used[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec(rec, 0, 0);
  return best;
}

// all maximum matchings as ascending edge-id lists; lexicographically least
inline std::vector<int> naive_lex_least_max_matching(const hypermatch::Hypergraph& g) {
  const int mu = naive_mu(g);
  std::vector<int> best;
  std::vector<int> cur;
  std::vector<char> used(static_cast<std::size_t>(g.n()) + 1, 0);
  bool found = false;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(cur.size()) == mu) {
      if (!found || cur < best) { best = cur; found = true; }
      return;
    }
    for (std::size_t i = from; i < g.m(); ++i) {
      bool free = true;
      for (auto v : g.edge(i))
        if (used[static_cast<std::size_t>(v)]) { free = false; break; }
      if (!free) continue;
      for (auto v : g.edge(i)) used[static_cast<std::size_t>(v)] = 1;
      cur.push_back(static_cast<int>(i));
      self(self, i + 1);
      cur.pop_back();
      for (auto v : g.edge(i)) used[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec(rec, 0);
  return best;
}

// literal shiftedness: for every edge, every member j, and every i < j not in
// the edge, the tuple with j replaced by i must also be an edge
inline bool naive_is_shifted(const hypermatch::Hypergraph& g) {
  for (std::size_t id = 0; id < g.m(); ++id) {
    const hypermatch::EdgeTuple e = g.edge_tuple(id);
    for (int j : e) {
      for (int i = 1; i < j; ++i) {
        if (std::find(e.begin(), e.end(), i) != e.end()) continue;
        hypermatch::EdgeTuple f;
        for (int v : e)
          if (v != j) f.push_back(v);
        f.push_back(i);
        std::sort(f.begin(), f.end());
        if (!g.contains(f)) return false;
      }
    }
  }
  return true;
}

// uniform random k-uniform hypergraph with m distinct edges (m capped at C(n,k))
inline hypermatch::Hypergraph random_hypergraph(int n, int k, int m, std::mt19937_64& rng) {
  std::vector<hypermatch::EdgeTuple> pool;
  hypermatch::for_each_k_subset(n, k, [&](std::span<const int> a) {
    pool.emplace_back(a.begin(), a.end());
  });
  std::shuffle(pool.begin(), pool.end(), rng);
  if (static_cast<std::size_t>(m) < pool.size()) pool.resize(static_cast<std::size_t>(m));
  return hypermatch::Hypergraph::build(n, k, pool);
}

}  // namespace oracles

#endif  // HYPERMATCH_TESTS_ORACLES_HPP_
