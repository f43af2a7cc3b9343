#ifndef HYPERMATCH_HYPERGRAPH_HPP_
#define HYPERMATCH_HYPERGRAPH_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypermatch/combinatorics.hpp"

namespace hypermatch {

using Vertex = int;  // 1-based
using EdgeTuple = std::vector<Vertex>;

inline constexpr int kMaxVertices = 256;
inline constexpr int kMaskVertices = 64;  // bitset mirror available up to here

// k-uniform hypergraph on vertex set {1..n}. Edges are stored as sorted
// k-tuples in colex order, deduplicated. For n <= 64 every edge also carries
// a uint64 bitmask mirror (bit v-1 set for vertex v).
class Hypergraph {
 public:
  Hypergraph() = default;

  static Hypergraph build(int n, int k, std::span<const EdgeTuple> edges) {
    if (k < 1) throw std::invalid_argument("hypergraph: k must be at least 1");
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("hypergraph: n must be in [0, " +
                                  std::to_string(kMaxVertices) + "]");
    std::vector<EdgeTuple> sorted;
    sorted.reserve(edges.size());
    for (const EdgeTuple& e : edges) {
      if (static_cast<int>(e.size()) != k)
        throw std::invalid_argument("hypergraph: edge arity differs from k");
      EdgeTuple t = e;
      std::sort(t.begin(), t.end());
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 1 || t[i] > n)
          throw std::invalid_argument("hypergraph: vertex out of range");
        if (i > 0 && t[i] == t[i - 1])
          throw std::invalid_argument("hypergraph: repeated vertex in edge");
      }
      sorted.push_back(std::move(t));
    }
    std::sort(sorted.begin(), sorted.end(), [](const EdgeTuple& a, const EdgeTuple& b) {
      return colex_less(a, b);
    });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    Hypergraph g;
    g.n_ = n;
    g.k_ = k;
    g.m_ = sorted.size();
    g.flat_.reserve(g.m_ * static_cast<std::size_t>(k));
    for (const EdgeTuple& t : sorted)
      g.flat_.insert(g.flat_.end(), t.begin(), t.end());
    if (n <= kMaskVertices) {
      g.masks_.reserve(g.m_);
      for (const EdgeTuple& t : sorted) {
        std::uint64_t mask = 0;
        for (Vertex v : t) mask |= std::uint64_t{1} << (v - 1);
        g.masks_.push_back(mask);
      }
    }
    g.inc_.assign(static_cast<std::size_t>(n) + 1, {});
    for (std::size_t i = 0; i < g.m_; ++i)
      for (Vertex v : g.edge(i)) g.inc_[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    return g;
  }

  // fast path: flat concatenation of m sorted k-tuples already in strict
  // colex order (as produced by subset enumeration); validated cheaply
  static Hypergraph from_colex_sorted(int n, int k, std::vector<Vertex> flat) {
    if (k < 1) throw std::invalid_argument("hypergraph: k must be at least 1");
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("hypergraph: n must be in [0, " +
                                  std::to_string(kMaxVertices) + "]");
    if (flat.size() % static_cast<std::size_t>(k) != 0)
      throw std::invalid_argument("hypergraph: flat edge data not a multiple of k");
    Hypergraph g;
    g.n_ = n;
    g.k_ = k;
    g.m_ = flat.size() / static_cast<std::size_t>(k);
    g.flat_ = std::move(flat);
    for (std::size_t i = 0; i < g.m_; ++i) {
      const auto e = g.edge(i);
      for (std::size_t t = 0; t < e.size(); ++t) {
        if (e[t] < 1 || e[t] > n)
          throw std::invalid_argument("hypergraph: vertex out of range");
        if (t > 0 && e[t] <= e[t - 1])
          throw std::invalid_argument("hypergraph: tuple not strictly increasing");
      }
      if (i > 0 && !colex_less(g.edge(i - 1), e))
        throw std::invalid_argument("hypergraph: edges not in strict colex order");
    }
    if (n <= kMaskVertices) {
      g.masks_.reserve(g.m_);
      for (std::size_t i = 0; i < g.m_; ++i) {
        std::uint64_t mask = 0;
        for (Vertex v : g.edge(i)) mask |= std::uint64_t{1} << (v - 1);
        g.masks_.push_back(mask);
      }
    }
    g.inc_.assign(static_cast<std::size_t>(n) + 1, {});
    for (std::size_t i = 0; i < g.m_; ++i)
      for (Vertex v : g.edge(i)) g.inc_[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    return g;
  }

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t m() const { return m_; }

  std::span<const Vertex> edge(std::size_t i) const {
    return {flat_.data() + i * static_cast<std::size_t>(k_), static_cast<std::size_t>(k_)};
  }

  EdgeTuple edge_tuple(std::size_t i) const {
    auto e = edge(i);
    return EdgeTuple(e.begin(), e.end());
  }

  bool has_masks() const { return n_ <= kMaskVertices; }

  std::uint64_t edge_mask(std::size_t i) const { return masks_[i]; }

  std::span<const std::uint64_t> edge_masks() const { return masks_; }

  // Edge id of the given vertex set, if present. The tuple may be unsorted.
  std::optional<std::size_t> edge_index(std::span<const Vertex> tuple) const {
    if (static_cast<int>(tuple.size()) != k_) return std::nullopt;
    EdgeTuple t(tuple.begin(), tuple.end());
    std::sort(t.begin(), t.end());
    std::size_t lo = 0, hi = m_;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (colex_less(edge(mid), t)) lo = mid + 1; else hi = mid;
    }
    if (lo < m_ && !colex_less(t, edge(lo))) return lo;
    return std::nullopt;
  }

  bool contains(std::span<const Vertex> tuple) const { return edge_index(tuple).has_value(); }

  std::uint64_t degree(Vertex v) const { return inc_[static_cast<std::size_t>(v)].size(); }

  // Ids of edges containing v, ascending.
  std::span<const int> incident_edges(Vertex v) const { return inc_[static_cast<std::size_t>(v)]; }

  // Number of edges e with v in e and e - {v} contained in x.
  std::uint64_t deg_restricted(Vertex v, std::span<const Vertex> x) const {
    std::vector<char> in_x(static_cast<std::size_t>(n_) + 1, 0);
    for (Vertex u : x) in_x[static_cast<std::size_t>(u)] = 1;
    std::uint64_t count = 0;
    for (int id : incident_edges(v)) {
      bool ok = true;
      for (Vertex u : edge(static_cast<std::size_t>(id)))
        if (u != v && !in_x[static_cast<std::size_t>(u)]) { ok = false; break; }
      count += ok;
    }
    return count;
  }

  // Number of edges containing both v and u whose remaining vertices lie in x.
  std::uint64_t pair_deg_restricted(Vertex v, Vertex u, std::span<const Vertex> x) const {
    std::vector<char> in_x(static_cast<std::size_t>(n_) + 1, 0);
    for (Vertex w : x) in_x[static_cast<std::size_t>(w)] = 1;
    std::uint64_t count = 0;
    for (int id : incident_edges(v)) {
      bool has_u = false, rest_ok = true;
      for (Vertex w : edge(static_cast<std::size_t>(id))) {
        if (w == u) has_u = true;
        else if (w != v && !in_x[static_cast<std::size_t>(w)]) { rest_ok = false; break; }
      }
      count += (has_u && rest_ok);
    }
    return count;
  }

  std::vector<EdgeTuple> edge_tuples() const {
    std::vector<EdgeTuple> out;
    out.reserve(m_);
    for (std::size_t i = 0; i < m_; ++i) out.push_back(edge_tuple(i));
    return out;
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.flat_ == b.flat_;
  }

 private:
  int n_ = 0;
  int k_ = 1;
  std::size_t m_ = 0;
  std::vector<Vertex> flat_;            // m sorted k-tuples, colex edge order
  std::vector<std::uint64_t> masks_;    // per-edge bitmasks, only when n <= 64
  std::vector<std::vector<int>> inc_;   // per-vertex incident edge ids, ascending
};

}  // namespace hypermatch

#endif  // HYPERMATCH_HYPERGRAPH_HPP_
