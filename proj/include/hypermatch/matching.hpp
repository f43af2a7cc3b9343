#ifndef HYPERMATCH_MATCHING_HPP_
#define HYPERMATCH_MATCHING_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

struct Matching {
  std::vector<EdgeTuple> edges;
  std::size_t size() const { return edges.size(); }
};

inline bool is_valid_matching(const Hypergraph& g, const Matching& m) {
  std::vector<char> used(static_cast<std::size_t>(g.n()) + 1, 0);
  for (const EdgeTuple& e : m.edges) {
    if (!g.contains(e)) return false;
    for (Vertex v : e) {
      if (used[static_cast<std::size_t>(v)]) return false;
      used[static_cast<std::size_t>(v)] = 1;
    }
  }
  return true;
}

namespace detail {

struct u64_ops {
  using mask = std::uint64_t;
  static mask zero() { return 0; }
  static mask bit(int i) { return mask{1} << i; }
  static bool test(mask a, int i) { return (a >> i) & 1; }
  static bool any(mask a) { return a != 0; }
  static bool subset(mask a, mask b) { return (a & ~b) == 0; }
  static bool disjoint(mask a, mask b) { return (a & b) == 0; }
  static mask intersect(mask a, mask b) { return a & b; }
  static mask remove(mask a, mask b) { return a & ~b; }
  static mask unite(mask a, mask b) { return a | b; }
  static int popcount(mask a) { return std::popcount(a); }
  static int lowest(mask a) { return std::countr_zero(a); }
};

struct mask256 {
  std::array<std::uint64_t, 4> w{};
  friend bool operator==(const mask256&, const mask256&) = default;
};

struct m256_ops {
  using mask = mask256;
  static mask zero() { return {}; }
  static mask bit(int i) {
    mask m{};
    m.w[static_cast<std::size_t>(i) / 64] = std::uint64_t{1} << (i % 64);
    return m;
  }
  static bool test(mask a, int i) {
    return (a.w[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1;
  }
  static bool any(mask a) { return (a.w[0] | a.w[1] | a.w[2] | a.w[3]) != 0; }
  static bool subset(mask a, mask b) {
    for (int i = 0; i < 4; ++i)
      if (a.w[static_cast<std::size_t>(i)] & ~b.w[static_cast<std::size_t>(i)]) return false;
    return true;
  }
  static bool disjoint(mask a, mask b) {
    for (int i = 0; i < 4; ++i)
      if (a.w[static_cast<std::size_t>(i)] & b.w[static_cast<std::size_t>(i)]) return false;
    return true;
  }
  static mask intersect(mask a, mask b) {
    mask r;
    for (int i = 0; i < 4; ++i)
      r.w[static_cast<std::size_t>(i)] = a.w[static_cast<std::size_t>(i)] & b.w[static_cast<std::size_t>(i)];
    return r;
  }
  static mask remove(mask a, mask b) {
    mask r;
    for (int i = 0; i < 4; ++i)
      r.w[static_cast<std::size_t>(i)] = a.w[static_cast<std::size_t>(i)] & ~b.w[static_cast<std::size_t>(i)];
    return r;
  }
  static mask unite(mask a, mask b) {
    mask r;
    for (int i = 0; i < 4; ++i)
      r.w[static_cast<std::size_t>(i)] = a.w[static_cast<std::size_t>(i)] | b.w[static_cast<std::size_t>(i)];
    return r;
  }
  static int popcount(mask a) {
    int c = 0;
    for (std::uint64_t x : a.w) c += std::popcount(x);
    return c;
  }
  static int lowest(mask a) {
    for (int i = 0; i < 4; ++i)
      if (a.w[static_cast<std::size_t>(i)]) return 64 * i + std::countr_zero(a.w[static_cast<std::size_t>(i)]);
    return -1;
  }
};

// Static edge index used by the solver: edge masks in colex order, per-vertex
// incidence, vertex support, and a one-time greedy vertex cover. Any vertex
// cover c yields mu(avail) <= |c & avail| because disjoint edges consume
// distinct cover vertices; the support term gives mu <= |avail & support| / k.
template <typename Ops>
struct match_index {
  using mask = typename Ops::mask;
  int n = 0;
  int k = 1;
  std::vector<mask> edges;
  std::vector<std::vector<int>> inc;  // 0-based vertex index -> edge ids
  mask support = Ops::zero();
  mask cover = Ops::zero();

  static match_index build(const Hypergraph& g) {
    match_index ix;
    ix.n = g.n();
    ix.k = g.k();
    ix.edges.reserve(g.m());
    ix.inc.assign(static_cast<std::size_t>(g.n()), {});
    for (std::size_t i = 0; i < g.m(); ++i) {
      mask em = Ops::zero();
      for (Vertex v : g.edge(i)) em = Ops::unite(em, Ops::bit(v - 1));
      ix.edges.push_back(em);
      for (Vertex v : g.edge(i)) ix.inc[static_cast<std::size_t>(v - 1)].push_back(static_cast<int>(i));
    }
    for (mask em : ix.edges) ix.support = Ops::unite(ix.support, em);

    // greedy cover: repeatedly take the vertex hitting the most uncovered
    // edges (ties to the lowest id); uncovered degrees kept incrementally
    std::vector<char> covered(ix.edges.size(), 0);
    std::vector<std::size_t> deg(static_cast<std::size_t>(ix.n), 0);
    for (std::size_t v = 0; v < deg.size(); ++v) deg[v] = ix.inc[v].size();
    std::size_t left = ix.edges.size();
    while (left > 0) {
      int pick = 0;
      for (int v = 1; v < ix.n; ++v)
        if (deg[static_cast<std::size_t>(v)] > deg[static_cast<std::size_t>(pick)]) pick = v;
      ix.cover = Ops::unite(ix.cover, Ops::bit(pick));
      for (int id : ix.inc[static_cast<std::size_t>(pick)]) {
        if (covered[static_cast<std::size_t>(id)]) continue;
        covered[static_cast<std::size_t>(id)] = 1;
        --left;
        for (int v = 0; v < ix.n; ++v)
          if (Ops::test(ix.edges[static_cast<std::size_t>(id)], v)) --deg[static_cast<std::size_t>(v)];
      }
    }
    return ix;
  }

  int ub(mask avail) const {
    const int a = Ops::popcount(Ops::intersect(avail, support)) / k;
    const int b = Ops::popcount(Ops::intersect(avail, cover));
    return a < b ? a : b;
  }

  // first-fit matching over edges in colex order; exact lower bound
  int greedy(mask avail) const {
    int count = 0;
    for (mask em : edges)
      if (Ops::subset(em, avail)) {
        avail = Ops::remove(avail, em);
        ++count;
      }
    return count;
  }
};

// Exact maximum-matching solver. Branches on the lowest usable vertex: either
// some edge through it is used, or the vertex is dropped for good. Every
// memoized value is the exact mu of its key, so entries are reusable across
// branches. Children are explored in decreasing upper-bound order, which lets
// the cap break (best == ub(avail)) fire early on structured inputs.
template <typename Ops>
class mu_solver {
 public:
  using mask = typename Ops::mask;
  static constexpr bool kMemo = std::is_same_v<mask, std::uint64_t>;

  explicit mu_solver(const Hypergraph& g) : ix_(match_index<Ops>::build(g)) {}

  const match_index<Ops>& index() const { return ix_; }

  mask full() const { return ix_.support; }

  int solve(mask avail) {
    avail = Ops::intersect(avail, ix_.support);
    if constexpr (kMemo) {
      avail = normalize(avail);
      if (auto it = memo_.find(avail); it != memo_.end()) return it->second;
    }
    if (!Ops::any(avail)) return 0;
    const int cap = ix_.ub(avail);
    if (cap == 0) {
      if constexpr (kMemo) memo_.emplace(avail, 0);
      return 0;
    }

    // lowest usable vertex; vertices with no contained incident edge cannot
    // affect mu and are folded away
    int v;
    std::vector<int> through;
    for (;;) {
      v = Ops::lowest(avail);
      for (int id : ix_.inc[static_cast<std::size_t>(v)])
        if (Ops::subset(ix_.edges[static_cast<std::size_t>(id)], avail)) through.push_back(id);
      if (!through.empty()) break;
      avail = Ops::remove(avail, Ops::bit(v));
      if (!Ops::any(avail)) {
        if constexpr (kMemo) memo_.emplace(avail, 0);
        return 0;
      }
    }

    // visit edges through v by decreasing child bound (counting buckets keep
    // colex order within a bucket)
    std::vector<int> child_ub(through.size());
    int ub_max = 0;
    for (std::size_t i = 0; i < through.size(); ++i) {
      child_ub[i] = ix_.ub(Ops::remove(avail, ix_.edges[static_cast<std::size_t>(through[i])]));
      ub_max = std::max(ub_max, child_ub[i]);
    }
    std::vector<std::vector<int>> bucket(static_cast<std::size_t>(ub_max) + 1);
    for (std::size_t i = 0; i < through.size(); ++i)
      bucket[static_cast<std::size_t>(child_ub[i])].push_back(through[i]);

    int best = 0;
    for (int b = ub_max; b >= 0 && best < cap; --b) {
      if (1 + b <= best) break;
      for (int id : bucket[static_cast<std::size_t>(b)]) {
        const int cand = 1 + solve(Ops::remove(avail, ix_.edges[static_cast<std::size_t>(id)]));
        if (cand > best) best = cand;
        if (best == cap) break;
      }
    }
    if (best < cap) {
      const mask skipped = Ops::remove(avail, Ops::bit(v));
      if (ix_.ub(skipped) > best) best = std::max(best, solve(skipped));
    }
    if constexpr (kMemo) memo_.emplace(avail, best);
    return best;
  }

  // true iff avail holds a matching of size >= need; short-circuits
  bool reach(mask avail, int need) {
    if (need <= 0) return true;
    avail = Ops::intersect(avail, ix_.support);
    if constexpr (kMemo) {
      avail = normalize(avail);
      if (auto it = memo_.find(avail); it != memo_.end()) return it->second >= need;
    }
    if (ix_.ub(avail) < need) return false;
    if (ix_.greedy(avail) >= need) return true;

    int v;
    std::vector<int> through;
    for (;;) {
      if (!Ops::any(avail)) return false;
      v = Ops::lowest(avail);
      for (int id : ix_.inc[static_cast<std::size_t>(v)])
        if (Ops::subset(ix_.edges[static_cast<std::size_t>(id)], avail)) through.push_back(id);
      if (!through.empty()) break;
      avail = Ops::remove(avail, Ops::bit(v));
    }

    std::vector<std::pair<int, int>> ordered;  // (-child_ub, id)
    ordered.reserve(through.size());
    for (int id : through) {
      const int cub = ix_.ub(Ops::remove(avail, ix_.edges[static_cast<std::size_t>(id)]));
      if (1 + cub >= need) ordered.emplace_back(-cub, id);
    }
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto [neg, id] : ordered) {
      (void)neg;
      if (reach(Ops::remove(avail, ix_.edges[static_cast<std::size_t>(id)]), need - 1)) return true;
    }
    const mask skipped = Ops::remove(avail, Ops::bit(v));
    if (ix_.ub(skipped) >= need) return reach(skipped, need);
    return false;
  }

  // lexicographically least maximum matching as an ascending edge-id list.
  // The colex-least edge extendable to a maximum matching is its first edge;
  // induction on the remainder gives the rest.
  std::vector<int> witness_ids() {
    std::vector<int> out;
    mask avail = ix_.support;
    int need = solve(avail);
    std::size_t from = 0;
    while (need > 0) {
      bool picked = false;
      for (std::size_t id = from; id < ix_.edges.size(); ++id) {
        const mask em = ix_.edges[id];
        if (!Ops::subset(em, avail)) continue;
        const mask rest = Ops::remove(avail, em);
        if (ix_.ub(rest) < need - 1) continue;
        if (extendable(rest, need - 1)) {
          out.push_back(static_cast<int>(id));
          avail = rest;
          --need;
          from = id + 1;
          picked = true;
          break;
        }
      }
      if (!picked) throw std::logic_error("witness: no extendable edge found");
    }
    return out;
  }

 private:
  bool extendable(mask avail, int need) {
    if constexpr (kMemo) return solve(avail) >= need;
    else return reach(avail, need);
  }

  // union of edges still contained in avail: dropping unusable vertices keeps
  // mu and canonicalizes the memo key
  mask normalize(mask avail) const {
    mask u = Ops::zero();
    for (mask em : ix_.edges)
      if (Ops::subset(em, avail)) u = Ops::unite(u, em);
    return u;
  }

  match_index<Ops> ix_;
  std::unordered_map<std::uint64_t, int> memo_;  // used only when kMemo
};

// exact maximum matching size within an explicit list of pairwise-distinct
// edge masks; cap bounds the answer from above (early exit when reached)
inline int mu_of_masks(std::span<const std::uint64_t> masks, int cap) {
  int best = 0;
  auto rec = [&](auto&& self, std::size_t from, std::uint64_t used, int have) -> void {
    if (have > best) best = have;
    if (best >= cap) return;
    if (have + static_cast<int>(masks.size() - from) <= best) return;
    for (std::size_t i = from; i < masks.size(); ++i) {
      if (masks[i] & used) continue;
      self(self, i + 1, used | masks[i], have + 1);
      if (best >= cap) return;
    }
  };
  rec(rec, 0, 0, 0);
  return best;
}

// true iff the list holds `need` pairwise disjoint edges avoiding `forbidden`
inline bool has_disjoint_subset(std::span<const std::uint64_t> masks, int need,
                                std::uint64_t forbidden) {
  auto rec = [&](auto&& self, std::size_t from, std::uint64_t used, int left) -> bool {
    if (left == 0) return true;
    if (static_cast<int>(masks.size() - from) < left) return false;
    for (std::size_t i = from; i < masks.size(); ++i) {
      if (masks[i] & used) continue;
      if (self(self, i + 1, used | masks[i], left - 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, forbidden, need);
}

}  // namespace detail

namespace detail {

template <typename Ops>
Matching ids_to_matching(const Hypergraph& g, const std::vector<int>& ids) {
  Matching m;
  m.edges.reserve(ids.size());
  for (int id : ids) m.edges.push_back(g.edge_tuple(static_cast<std::size_t>(id)));
  return m;
}

}  // namespace detail

inline int matching_number(const Hypergraph& g) {
  if (g.m() == 0) return 0;
  if (g.has_masks()) {
    detail::mu_solver<detail::u64_ops> s(g);
    return s.solve(s.full());
  }
  detail::mu_solver<detail::m256_ops> s(g);
  return s.solve(s.full());
}

inline bool has_matching_of_size(const Hypergraph& g, int s) {
  if (s <= 0) return true;
  if (g.m() == 0) return false;
  if (g.has_masks()) {
    detail::mu_solver<detail::u64_ops> sol(g);
    return sol.solve(sol.full()) >= s;
  }
  detail::mu_solver<detail::m256_ops> sol(g);
  return sol.reach(sol.full(), s);
}

// lexicographically least maximum matching, edges ascending in colex order
inline Matching max_matching_witness(const Hypergraph& g) {
  if (g.m() == 0) return {};
  if (g.has_masks()) {
    detail::mu_solver<detail::u64_ops> s(g);
    return detail::ids_to_matching<detail::u64_ops>(g, s.witness_ids());
  }
  detail::mu_solver<detail::m256_ops> s(g);
  return detail::ids_to_matching<detail::m256_ops>(g, s.witness_ids());
}

}  // namespace hypermatch

#endif  // HYPERMATCH_MATCHING_HPP_
