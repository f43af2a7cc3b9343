#ifndef HYPERMATCH_EXTREMAL_HPP_
#define HYPERMATCH_EXTREMAL_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypermatch/hypergraph.hpp"
#include "hypermatch/matching.hpp"
#include "hypermatch/shifting.hpp"

namespace hypermatch {

enum class DominantSide { cover, clique, tie, complete };

inline const char* to_string(DominantSide d) {
  switch (d) {
    case DominantSide::cover: return "cover";
    case DominantSide::clique: return "clique";
    case DominantSide::tie: return "tie";
    case DominantSide::complete: return "complete";
  }
  return "?";
}

struct BoundBreakdown {
  int n = 0, k = 0, s = 0;
  std::uint64_t cover_value = 0;   // C(n,k) - C(n-s,k)
  std::uint64_t clique_value = 0;  // C(ks+k-1,k)
  std::uint64_t bound = 0;
  DominantSide dominant = DominantSide::tie;
  bool complete_case = false;  // n <= ks+k-1: every k-set fits, bound = C(n,k)
};

// the conjectured maximum edge count among k-graphs on n vertices with
// matching number exactly s, as the max of the cover and clique families
inline BoundBreakdown erdos_bound(int n, int k, int s) {
  if (k < 1 || s < 1) throw std::invalid_argument("erdos_bound: requires k >= 1, s >= 1");
  if (static_cast<long long>(k) * s > n)
    throw std::invalid_argument("erdos_bound: requires ks <= n (no s-matching fits otherwise)");
  BoundBreakdown b;
  b.n = n;
  b.k = k;
  b.s = s;
  const auto un = static_cast<std::uint64_t>(n);
  const auto uk = static_cast<std::uint64_t>(k);
  b.cover_value = binom(un, uk) - binom(un - static_cast<std::uint64_t>(s), uk);
  b.clique_value = binom(static_cast<std::uint64_t>(k) * s + uk - 1, uk);
  b.complete_case = (static_cast<long long>(k) * s + k - 1 >= n);
  if (b.complete_case) {
    b.bound = binom(un, uk);
    b.dominant = DominantSide::complete;
  } else if (b.cover_value > b.clique_value) {
    b.bound = b.cover_value;
    b.dominant = DominantSide::cover;
  } else if (b.clique_value > b.cover_value) {
    b.bound = b.clique_value;
    b.dominant = DominantSide::clique;
  } else {
    b.bound = b.cover_value;
    b.dominant = DominantSide::tie;
  }
  return b;
}

// smallest s >= 1 whose cover value drops to at most the clique value;
// nullopt if no s in 1..floor(n/k) qualifies
inline std::optional<int> crossover_threshold(int n, int k) {
  if (k < 1 || n < 2 * k) throw std::invalid_argument("crossover_threshold: requires n >= 2k");
  for (int s = 1; static_cast<long long>(k) * s <= n; ++s) {
    const auto un = static_cast<std::uint64_t>(n);
    const auto uk = static_cast<std::uint64_t>(k);
    const std::uint64_t cover = binom(un, uk) - binom(un - static_cast<std::uint64_t>(s), uk);
    const std::uint64_t clique = binom(static_cast<std::uint64_t>(k) * s + uk - 1, uk);
    if (cover <= clique) return s;
  }
  return std::nullopt;
}

// unique root in (0, 1/k) of 1 - (1-a)^k = (ka)^k; the limit of
// crossover_threshold(n,k)/n as n grows. Bisection: f > 0 near 0+, f < 0 at
// 1/k, and the root is unique in the open interval.
inline double crossover_ratio(int k, double tol = 1e-12) {
  if (k < 2) throw std::invalid_argument("crossover_ratio: requires k >= 2");
  if (!(tol > 0)) throw std::invalid_argument("crossover_ratio: requires tol > 0");
  const auto f = [k](double a) {
    return 1.0 - std::pow(1.0 - a, k) - std::pow(k * a, k);
  };
  double lo = 1.0 / (2.0 * k);
  while (f(lo) <= 0) lo /= 2;  // defensive; the root exceeds 1/(2k)
  double hi = 1.0 / k;
  for (int it = 0; it < 500 && (hi - lo > tol || std::fabs(f((lo + hi) / 2)) > tol); ++it) {
    const double mid = (lo + hi) / 2;
    if (f(mid) > 0) lo = mid; else hi = mid;
  }
  return (lo + hi) / 2;
}

struct CovWitness {
  std::vector<Vertex> cover_set;  // size s
  std::uint64_t covered = 0;
  std::uint64_t uncovered = 0;
};

struct ClWitness {
  std::vector<Vertex> clique_set;
  std::size_t size() const { return clique_set.size(); }
};

// all k-subsets of {1..n} meeting S = {1..s}
inline std::pair<Hypergraph, CovWitness> construct_cov(int n, int k, int s) {
  if (s < 0 || k < 1 || static_cast<long long>(k) * s > n)
    throw std::invalid_argument("construct_cov: requires 0 <= s and ks <= n");
  std::vector<Vertex> flat;
  for_each_k_subset(n, k, [&](std::span<const int> a) {
    if (a[0] <= s) flat.insert(flat.end(), a.begin(), a.end());
  });
  Hypergraph g = Hypergraph::from_colex_sorted(n, k, std::move(flat));
  CovWitness w;
  for (int v = 1; v <= s; ++v) w.cover_set.push_back(v);
  w.covered = g.m();
  w.uncovered = 0;
  return {std::move(g), std::move(w)};
}

// all k-subsets of U = {1..ks+k-1}; remaining vertices isolated
inline std::pair<Hypergraph, ClWitness> construct_cl(int n, int k, int s) {
  if (s < 0 || k < 1) throw std::invalid_argument("construct_cl: requires 0 <= s, 1 <= k");
  const long long u = static_cast<long long>(k) * s + k - 1;
  if (u > n) throw std::invalid_argument("construct_cl: requires ks+k-1 <= n");
  std::vector<Vertex> flat;
  for_each_k_subset(static_cast<int>(u), k, [&](std::span<const int> a) {
    flat.insert(flat.end(), a.begin(), a.end());
  });
  Hypergraph g = Hypergraph::from_colex_sorted(n, k, std::move(flat));
  ClWitness w;
  for (int v = 1; v <= static_cast<int>(u); ++v) w.clique_set.push_back(v);
  return {std::move(g), std::move(w)};
}

struct ExactMembership {
  std::optional<CovWitness> cover;
  std::optional<ClWitness> clique;
};

// exact membership in the two families. Cover: when n >= s+k the cover set is
// forced to be exactly the set of full-degree vertices; otherwise (possible
// only for s <= 1 or k = 1) the prefix {1..s} is a valid canonical choice.
// Clique: the clique set is forced to be the union of all edges.
inline ExactMembership classify_exact(const Hypergraph& g, int s) {
  if (matching_number(g) != s)
    throw std::invalid_argument("classify_exact: matching number of G differs from s");
  ExactMembership out;
  const int n = g.n(), k = g.k();
  const auto un = static_cast<std::uint64_t>(n);
  const auto uk = static_cast<std::uint64_t>(k);

  // cover side
  {
    std::vector<std::vector<Vertex>> candidates;
    if (s == 0) {
      candidates.push_back({});
    } else if (s <= n) {
      const std::uint64_t full = binom(un - 1, uk - 1);
      std::vector<Vertex> full_deg;
      for (Vertex v = 1; v <= n; ++v)
        if (g.degree(v) == full) full_deg.push_back(v);
      if (static_cast<int>(full_deg.size()) == s) candidates.push_back(full_deg);
      std::vector<Vertex> prefix;
      for (Vertex v = 1; v <= s; ++v) prefix.push_back(v);
      candidates.push_back(prefix);
    }
    const std::uint64_t want =
        binom(un, uk) - binom(un - static_cast<std::uint64_t>(s), uk);
    for (const auto& cand : candidates) {
      if (g.m() != want) break;
      std::vector<char> in_s(static_cast<std::size_t>(n) + 1, 0);
      for (Vertex v : cand) in_s[static_cast<std::size_t>(v)] = 1;
      bool all_meet = true;
      for (std::size_t id = 0; id < g.m() && all_meet; ++id) {
        bool meets = false;
        for (Vertex v : g.edge(id))
          if (in_s[static_cast<std::size_t>(v)]) { meets = true; break; }
        all_meet = meets;
      }
      if (all_meet) {
        out.cover = CovWitness{cand, g.m(), 0};
        break;
      }
    }
  }

  // clique side
  {
    const long long u = static_cast<long long>(k) * s + k - 1;
    if (s == 0) {
      if (g.m() == 0 && u <= n) {
        ClWitness w;
        for (int v = 1; v <= static_cast<int>(u); ++v) w.clique_set.push_back(v);
        out.clique = std::move(w);
      }
    } else {
      std::vector<Vertex> touched;
      for (Vertex v = 1; v <= n; ++v)
        if (g.degree(v) > 0) touched.push_back(v);
      if (static_cast<long long>(touched.size()) == u &&
          g.m() == binom(static_cast<std::uint64_t>(u), uk))
        out.clique = ClWitness{touched};
    }
  }
  return out;
}

struct EpsMembership {
  std::optional<CovWitness> cover_eps;
  std::optional<ClWitness> clique_eps;
};

// certifying approximate membership: any returned witness is valid; absence
// only means the deterministic candidates failed. Cover candidates: the s
// highest-degree vertices (ties to lower ids) and the prefix {1..s}. Clique
// candidate: the longest prefix clique (exact for shifted inputs) extended
// greedily by later vertices.
inline EpsMembership classify_eps(const Hypergraph& g, int s, double eps = 0.1) {
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("classify_eps: requires eps in (0,1)");
  if (g.m() == 0) throw std::invalid_argument("classify_eps: requires e(G) > 0");
  EpsMembership out;
  const int n = g.n(), k = g.k();

  // cover side: count uncovered edges for a candidate set
  const auto uncovered_by = [&](const std::vector<Vertex>& cand) {
    std::vector<char> in_s(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v : cand) in_s[static_cast<std::size_t>(v)] = 1;
    std::uint64_t miss = 0;
    for (std::size_t id = 0; id < g.m(); ++id) {
      bool meets = false;
      for (Vertex v : g.edge(id))
        if (in_s[static_cast<std::size_t>(v)]) { meets = true; break; }
      miss += !meets;
    }
    return miss;
  };
  if (s >= 0 && s <= n) {
    std::vector<Vertex> by_degree(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) by_degree[static_cast<std::size_t>(v - 1)] = v;
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) {
      return g.degree(a) > g.degree(b);
    });
    by_degree.resize(static_cast<std::size_t>(s));
    std::sort(by_degree.begin(), by_degree.end());
    std::vector<Vertex> prefix;
    for (Vertex v = 1; v <= s; ++v) prefix.push_back(v);

    std::vector<Vertex> best = by_degree;
    std::uint64_t best_miss = uncovered_by(by_degree);
    const std::uint64_t prefix_miss = uncovered_by(prefix);
    if (prefix_miss < best_miss) {
      best = prefix;
      best_miss = prefix_miss;
    }
    if (static_cast<double>(best_miss) <= eps * static_cast<double>(g.m()))
      out.cover_eps = CovWitness{best, g.m() - best_miss, best_miss};
  }

  // clique side
  {
    // longest prefix {1..t} all of whose k-subsets are edges
    int t = k - 1;  // vacuous clique
    EdgeTuple probe;
    for (int cand = k; cand <= n; ++cand) {
      bool ok = true;
      for_each_k_subset(cand - 1, k - 1, [&](std::span<const int> a) {
        if (!ok) return;
        probe.assign(a.begin(), a.end());
        probe.push_back(cand);
        if (!g.contains(probe)) ok = false;
      });
      if (!ok) break;
      t = cand;
    }
    std::vector<Vertex> u;
    for (int v = 1; v <= t; ++v) u.push_back(v);
    // greedy extension past the prefix
    for (int cand = t + 1; cand <= n; ++cand) {
      if (static_cast<int>(u.size()) < k - 1) break;
      bool ok = true;
      for_each_k_subset(static_cast<int>(u.size()), k - 1, [&](std::span<const int> a) {
        if (!ok) return;
        probe.clear();
        for (int pos : a) probe.push_back(u[static_cast<std::size_t>(pos - 1)]);
        probe.push_back(cand);
        if (!g.contains(probe)) ok = false;
      });
      if (ok) u.push_back(cand);
    }
    if (static_cast<double>(u.size()) + 1e-9 >=
        (1.0 - eps) * static_cast<double>(k) * static_cast<double>(s))
      out.clique_eps = ClWitness{u};
  }
  return out;
}

struct RegimeFlags {
  bool n_ge_2k3_s = false;  // n >= 2k^3 s
  bool n_ge_3k2_s = false;  // n >= 3k^2 s
  bool k3_n_ge_4s = false;  // k = 3 and n >= 4s
};

// informational only: which cited sufficient conditions hold at (n,k,s)
inline RegimeFlags regime(int n, int k, int s) {
  RegimeFlags r;
  const long long kk = k;
  r.n_ge_2k3_s = n >= 2 * kk * kk * kk * s;
  r.n_ge_3k2_s = n >= 3 * kk * kk * s;
  r.k3_n_ge_4s = (k == 3) && (n >= 4LL * s);
  return r;
}

}  // namespace hypermatch

#endif  // HYPERMATCH_EXTREMAL_HPP_
