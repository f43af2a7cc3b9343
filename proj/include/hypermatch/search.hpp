#ifndef HYPERMATCH_SEARCH_HPP_
#define HYPERMATCH_SEARCH_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/extremal.hpp"
#include "hypermatch/hypergraph.hpp"
#include "hypermatch/matching.hpp"

namespace hypermatch {

enum class SearchEngine { bruteforce, shifted };

inline const char* to_string(SearchEngine e) {
  return e == SearchEngine::bruteforce ? "bruteforce" : "shifted";
}

enum class EnumerationMode { full, shifted };

inline const char* to_string(EnumerationMode m) {
  return m == EnumerationMode::full ? "full" : "shifted";
}

// Resource caps. Violating a cap throws; exhausting node_limit instead clears
// SearchResult::complete and keeps the best family found so far.
struct SearchLimits {
  long long node_limit = 200'000'000;
  std::uint64_t bruteforce_ksets_cap = 36;  // cap on C(n,k), the DFS depth
  int shifted_max_n = 12;                   // shifted engine runs at k = 3 only
};

struct SearchResult {
  int n = 0;
  int k = 0;
  int s = 0;
  long long value = 0;  // max edge count over graphs on [n] with matching number s
  Hypergraph witness;   // attains value; mu(witness) == s
  SearchEngine engine = SearchEngine::bruteforce;
  bool complete = true;  // search provably exhaustive; false only on node budget exhaustion
  long long nodes_explored = 0;
};

namespace detail {

// all k-subsets of [n] as vertex masks, in colex order (== ascending numeric order)
inline std::vector<std::uint64_t> kset_masks(int n, int k) {
  std::vector<std::uint64_t> out;
  for_each_k_subset(n, k, [&](std::span<const int> a) {
    std::uint64_t m = 0;
    for (int v : a) m |= std::uint64_t{1} << (v - 1);
    out.push_back(m);
  });
  return out;
}

// Include/exclude DFS over the colex-ordered k-sets, shared by both engines
// and by extremal enumeration.  Including a k-set must keep the matching
// number at most s; that fails exactly when s already-chosen edges are
// pairwise disjoint and avoid it, so the check is incremental (s = 1 scans
// the chosen edges, s = 2 scans the maintained disjoint-pair unions).
//
// Shifted mode restricts leaves to down-sets of the dominance order: colex is
// a linear extension of dominance, so a k-set is includable exactly while all
// its immediate predecessors (single-coordinate decrements) are included.
// Excluding a k-set marks its immediate successors blocked; blocked positions
// collapse without branching and tighten the optimistic bound
// chosen + remaining - blocked.
//
// Search mode keeps the first maximum found.  With include-first branching
// that is the family whose indicator vector over the colex-ordered k-sets is
// lexicographically largest, i.e. the maximum family preferring colex-least
// edges.  Enumerate mode collects every leaf whose size equals the target.
class subset_search {
 public:
  subset_search(int n, int k, int s, bool shifted_mode, long long node_limit)
      : n_(n), k_(k), s_(s), shifted_(shifted_mode), node_limit_(node_limit) {
    ksets_ = kset_masks(n, k);
    if (shifted_) {
      succs_.resize(ksets_.size());
      for (std::size_t i = 0; i < ksets_.size(); ++i) {
        const std::uint64_t e = ksets_[i];
        for (int v = 1; v < n_; ++v) {
          const std::uint64_t lo = std::uint64_t{1} << (v - 1);
          const std::uint64_t hi = lo << 1;
          if ((e & lo) && !(e & hi)) {
            const std::uint64_t succ = (e ^ lo) | hi;
            const auto it = std::lower_bound(ksets_.begin(), ksets_.end(), succ);
            succs_[i].push_back(static_cast<int>(it - ksets_.begin()));
          }
        }
      }
    }
    blocked_.assign(ksets_.size(), 0);
  }

  void run_search() {
    seed_greedy();  // a witness exists even under a tiny node budget
    rec(0);
  }

  void run_enumerate(long long target, std::vector<Hypergraph>* out) {
    enumerate_ = true;
    target_ = target;
    out_ = out;
    rec(0);
  }

  long long best() const { return best_; }
  bool complete() const { return complete_; }
  long long nodes() const { return nodes_; }
  Hypergraph best_graph() const { return build_graph(best_idx_); }

 private:
  bool can_include(std::uint64_t e) const {
    if (s_ == 1) {
      for (std::uint64_t c : chosen_)
        if (!(c & e)) return false;
      return true;
    }
    if (s_ == 2) {
      for (std::uint64_t u : pair_unions_)
        if (!(u & e)) return false;
      return true;
    }
    return !has_disjoint_subset(chosen_, s_, e);
  }

  void push_edge(int idx) {
    const std::uint64_t e = ksets_[static_cast<std::size_t>(idx)];
    if (s_ == 2) {
      for (std::uint64_t c : chosen_)
        if (!(c & e)) pair_unions_.push_back(c | e);
    }
    chosen_.push_back(e);
    chosen_idx_.push_back(idx);
  }

  void pop_edge(std::size_t pair_unions_size) {
    chosen_.pop_back();
    chosen_idx_.pop_back();
    if (s_ == 2) pair_unions_.resize(pair_unions_size);
  }

  int mark_successors(int idx) {
    if (!shifted_) return 0;
    int marked = 0;
    for (int t : succs_[static_cast<std::size_t>(idx)]) {
      if (!blocked_[static_cast<std::size_t>(t)]) {
        blocked_[static_cast<std::size_t>(t)] = 1;
        ++blocked_cnt_;
        mark_trail_.push_back(t);
        ++marked;
      }
    }
    return marked;
  }

  void unmark(int marked) {
    for (int i = 0; i < marked; ++i) {
      blocked_[static_cast<std::size_t>(mark_trail_.back())] = 0;
      mark_trail_.pop_back();
    }
    blocked_cnt_ -= marked;
  }

  // include-first sweep; equals the first DFS descent, so the strict-improvement
  // rule in rec() never replaces it with a tie
  void seed_greedy() {
    const int count = static_cast<int>(ksets_.size());
    for (int idx = 0; idx < count; ++idx) {
      if (shifted_ && blocked_[static_cast<std::size_t>(idx)]) {
        mark_successors(idx);
        continue;
      }
      if (can_include(ksets_[static_cast<std::size_t>(idx)])) {
        push_edge(idx);
      } else {
        mark_successors(idx);
      }
    }
    best_ = static_cast<long long>(chosen_.size());
    best_idx_ = chosen_idx_;
    chosen_.clear();
    chosen_idx_.clear();
    pair_unions_.clear();
    std::fill(blocked_.begin(), blocked_.end(), char{0});
    blocked_cnt_ = 0;
    mark_trail_.clear();
  }

  void rec(int idx) {
    if (nodes_ >= node_limit_) {
      complete_ = false;
      return;
    }
    ++nodes_;
    const int count = static_cast<int>(ksets_.size());
    const long long chosen = static_cast<long long>(chosen_.size());
    const long long optimistic = chosen + (count - idx) - blocked_cnt_;
    if (enumerate_ ? optimistic < target_ : optimistic <= best_) return;
    if (idx == count) {
      if (enumerate_ && chosen == target_) out_->push_back(build_graph(chosen_idx_));
      return;
    }
    if (shifted_ && blocked_[static_cast<std::size_t>(idx)]) {
      // forced exclusion: a dominance predecessor is missing
      --blocked_cnt_;  // idx leaves the lookahead window
      const int marked = mark_successors(idx);
      rec(idx + 1);
      unmark(marked);
      ++blocked_cnt_;
      return;
    }
    if (can_include(ksets_[static_cast<std::size_t>(idx)])) {
      const std::size_t pu = pair_unions_.size();
      push_edge(idx);
      if (!enumerate_ && static_cast<long long>(chosen_.size()) > best_) {
        best_ = static_cast<long long>(chosen_.size());
        best_idx_ = chosen_idx_;
      }
      rec(idx + 1);
      pop_edge(pu);
    }
    const int marked = mark_successors(idx);
    rec(idx + 1);
    unmark(marked);
  }

  Hypergraph build_graph(const std::vector<int>& idx) const {
    std::vector<Vertex> flat;
    flat.reserve(idx.size() * static_cast<std::size_t>(k_));
    for (int i : idx) {
      std::uint64_t m = ksets_[static_cast<std::size_t>(i)];
      while (m) {
        flat.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
      }
    }
    return Hypergraph::from_colex_sorted(n_, k_, std::move(flat));
  }

  int n_, k_, s_;
  bool shifted_;
  long long node_limit_;
  std::vector<std::uint64_t> ksets_;
  std::vector<std::vector<int>> succs_;
  std::vector<std::uint64_t> chosen_;
  std::vector<int> chosen_idx_;
  std::vector<std::uint64_t> pair_unions_;  // unions of disjoint chosen pairs, s = 2 only
  std::vector<char> blocked_;
  std::vector<int> mark_trail_;
  long long blocked_cnt_ = 0;
  long long nodes_ = 0;
  bool complete_ = true;
  bool enumerate_ = false;
  long long target_ = -1;
  long long best_ = 0;
  std::vector<int> best_idx_;
  std::vector<Hypergraph>* out_ = nullptr;
};

inline void check_search_args(int n, int k, int s) {
  if (k < 1 || s < 1) throw std::invalid_argument("search: requires k >= 1, s >= 1");
  if (static_cast<long long>(k) * s > n)
    throw std::invalid_argument("search: requires ks <= n");
  if (n > kMaskVertices)
    throw std::invalid_argument("search: requires n <= 64");
}

}  // namespace detail

inline SearchResult mu_search_bruteforce(int n, int k, int s,
                                         const SearchLimits& limits = {}) {
  detail::check_search_args(n, k, s);
  if (binom(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)) >
      limits.bruteforce_ksets_cap)
    throw std::invalid_argument("mu_search_bruteforce: C(n,k) exceeds the k-set cap " +
                                std::to_string(limits.bruteforce_ksets_cap));
  detail::subset_search eng(n, k, s, false, limits.node_limit);
  eng.run_search();
  SearchResult r;
  r.n = n;
  r.k = k;
  r.s = s;
  r.value = eng.best();
  r.witness = eng.best_graph();
  r.engine = SearchEngine::bruteforce;
  r.complete = eng.complete();
  r.nodes_explored = eng.nodes();
  return r;
}

inline SearchResult mu_search_shifted(int n, int k, int s,
                                      const SearchLimits& limits = {}) {
  detail::check_search_args(n, k, s);
  if (k != 3) throw std::invalid_argument("mu_search_shifted: requires k == 3");
  if (n > limits.shifted_max_n)
    throw std::invalid_argument("mu_search_shifted: n exceeds the shifted cap " +
                                std::to_string(limits.shifted_max_n));
  detail::subset_search eng(n, k, s, true, limits.node_limit);
  eng.run_search();
  SearchResult r;
  r.n = n;
  r.k = k;
  r.s = s;
  r.value = eng.best();
  r.witness = eng.best_graph();
  r.engine = SearchEngine::shifted;
  r.complete = eng.complete();
  r.nodes_explored = eng.nodes();
  return r;
}

// All labeled graphs on [n] with mu = s and the maximum edge count (full
// mode), or all shifted such graphs (shifted mode).  Each leaf of the subset
// DFS is visited once, so the list is duplicate free, and discovery order is
// deterministic: indicator vectors over the colex-ordered k-sets, include
// before exclude.  Throws if the node budget runs out, a partial list would
// not satisfy the contract.
inline std::vector<Hypergraph> enumerate_extremal(int n, int k, int s,
                                                  EnumerationMode mode,
                                                  const SearchLimits& limits = {}) {
  detail::check_search_args(n, k, s);
  const bool shifted = mode == EnumerationMode::shifted;
  SearchResult base = shifted ? mu_search_shifted(n, k, s, limits)
                              : mu_search_bruteforce(n, k, s, limits);
  if (!base.complete)
    throw std::runtime_error(
        "enumerate_extremal: node budget exhausted before the maximum was certified");
  detail::subset_search eng(n, k, s, shifted, limits.node_limit);
  std::vector<Hypergraph> out;
  eng.run_enumerate(base.value, &out);
  if (!eng.complete())
    throw std::runtime_error("enumerate_extremal: node budget exhausted during enumeration");
  return out;
}

// True iff every vertex whose degree exceeds C(n,k-1) - C(n-ks-1,k-1) has the
// full degree C(n-1,k-1).  Extremality of g is the caller's assertion; the
// predicate itself just checks degrees.
inline bool check_high_degree_full(const Hypergraph& g, int s) {
  const int n = g.n();
  const int k = g.k();
  const auto full = static_cast<long long>(
      binom(static_cast<std::uint64_t>(n - 1), static_cast<std::uint64_t>(k - 1)));
  const long long threshold =
      static_cast<long long>(
          binom(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k - 1))) -
      binom_ll(n - static_cast<long long>(k) * s - 1, k - 1);
  for (Vertex v = 1; v <= n; ++v) {
    const auto d = static_cast<long long>(g.degree(v));
    if (d > threshold && d != full) return false;
  }
  return true;
}

// one (n, s) cell of the desk-scale comparison against erdos_bound;
// reports, never asserts: mismatches only land in the flags
struct ConjectureCell {
  int n = 0;
  int k = 3;
  int s = 0;
  BoundBreakdown bound;
  std::optional<SearchResult> bruteforce;
  std::optional<SearchResult> shifted;
  bool engines_agree = true;  // false only when both engines ran and disagree
  bool matches_bound = true;  // false when some engine value differs from bound.bound
  std::optional<ExactMembership> witness_membership;  // shifted witness if present, else bruteforce
};

inline std::vector<ConjectureCell> verify_conjecture_range(int n_max,
                                                           const SearchLimits& limits = {}) {
  std::vector<ConjectureCell> out;
  for (int n = 3; n <= n_max; ++n) {
    for (int s = 1; 3 * s <= n; ++s) {
      ConjectureCell cell;
      cell.n = n;
      cell.s = s;
      cell.bound = erdos_bound(n, 3, s);
      if (binom(static_cast<std::uint64_t>(n), 3) <= limits.bruteforce_ksets_cap)
        cell.bruteforce = mu_search_bruteforce(n, 3, s, limits);
      if (n <= limits.shifted_max_n) cell.shifted = mu_search_shifted(n, 3, s, limits);
      if (cell.bruteforce && cell.shifted)
        cell.engines_agree = cell.bruteforce->value == cell.shifted->value;
      for (const SearchResult* r :
           {cell.bruteforce ? &*cell.bruteforce : nullptr,
            cell.shifted ? &*cell.shifted : nullptr}) {
        if (r && r->value != static_cast<long long>(cell.bound.bound))
          cell.matches_bound = false;
      }
      const SearchResult* w = cell.shifted  ? &*cell.shifted
                              : cell.bruteforce ? &*cell.bruteforce
                                                : nullptr;
      if (w && w->complete) cell.witness_membership = classify_exact(w->witness, s);
      out.push_back(std::move(cell));
    }
  }
  return out;
}

}  // namespace hypermatch

#endif  // HYPERMATCH_SEARCH_HPP_
