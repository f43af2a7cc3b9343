#ifndef HYPERMATCH_STRUCTURE_HPP_
#define HYPERMATCH_STRUCTURE_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/hypergraph.hpp"
#include "hypermatch/matching.hpp"
#include "hypermatch/shifting.hpp"

namespace hypermatch {

// Frame over a maximum matching of a 3-graph: each matching edge (i,j,k) is
// sorted ascending with i in class I, j in J, k in K, and the edges are
// ordered by their K vertex ascending.  V' collects the unsaturated vertices.
struct MatchingFrame {
  Matching m;
  std::vector<Vertex> i_of, j_of, k_of;  // class labels per matching edge
  std::vector<Vertex> v_prime;           // unsaturated vertices, ascending
  std::vector<int> edge_of;              // vertex -> matching edge index, -1 if unsaturated
  bool input_shifted = true;             // reports label non-shifted inputs

  int s() const { return static_cast<int>(m.size()); }
  bool saturated(Vertex v) const { return edge_of[static_cast<std::size_t>(v)] >= 0; }
  bool in_i(Vertex v) const {
    const int e = edge_of[static_cast<std::size_t>(v)];
    return e >= 0 && i_of[static_cast<std::size_t>(e)] == v;
  }
};

inline MatchingFrame build_frame(const Hypergraph& g) {
  if (g.k() != 3) throw std::invalid_argument("build_frame: requires k == 3");
  MatchingFrame fr;
  fr.m = max_matching_witness(g);
  fr.input_shifted = is_shifted(g);
  fr.edge_of.assign(static_cast<std::size_t>(g.n()) + 1, -1);
  // witness edges arrive in colex order, which sorts by the largest vertex,
  // so the K labels are automatically ascending
  for (std::size_t l = 0; l < fr.m.edges.size(); ++l) {
    const EdgeTuple& e = fr.m.edges[l];
    fr.i_of.push_back(e[0]);
    fr.j_of.push_back(e[1]);
    fr.k_of.push_back(e[2]);
    for (Vertex v : e) fr.edge_of[static_cast<std::size_t>(v)] = static_cast<int>(l);
  }
  for (Vertex v = 1; v <= g.n(); ++v)
    if (!fr.saturated(v)) fr.v_prime.push_back(v);
  return fr;
}

// Auxiliary attachment structure over V(M): F1 holds vertices with many
// completions into V', F2 holds cross-matching pairs with many completions
// into V', F3 holds cross-matching triples that are edges of the host graph.
struct AuxHypergraph {
  long long c1 = 0;  // threshold used for F1 membership
  long long c2 = 0;  // threshold used for F2 membership
  std::vector<Vertex> f1;                 // ascending
  std::vector<std::array<Vertex, 2>> f2;  // each ascending, list sorted
  std::vector<std::array<Vertex, 3>> f3;  // each ascending, list sorted

  bool has_f1(Vertex v) const { return std::binary_search(f1.begin(), f1.end(), v); }
  bool has_f2(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(f2.begin(), f2.end(), std::array<Vertex, 2>{a, b});
  }
  bool has_f3(std::array<Vertex, 3> t) const {
    std::sort(t.begin(), t.end());
    return std::binary_search(f3.begin(), f3.end(), t);
  }
};

// Thresholds c1 < 0 and c2 < 0 select the defaults 20n and 20.
inline AuxHypergraph build_aux(const Hypergraph& g, const MatchingFrame& fr,
                               long long c1 = -1, long long c2 = -1) {
  AuxHypergraph aux;
  aux.c1 = c1 < 0 ? 20LL * g.n() : c1;
  aux.c2 = c2 < 0 ? 20LL : c2;
  const std::span<const Vertex> vp(fr.v_prime);
  std::vector<Vertex> sat;
  for (Vertex v = 1; v <= g.n(); ++v)
    if (fr.saturated(v)) sat.push_back(v);
  for (Vertex v : sat)
    if (static_cast<long long>(g.deg_restricted(v, vp)) >= aux.c1) aux.f1.push_back(v);
  for (std::size_t a = 0; a < sat.size(); ++a) {
    for (std::size_t b = a + 1; b < sat.size(); ++b) {
      const Vertex v = sat[a];
      const Vertex w = sat[b];
      if (fr.edge_of[static_cast<std::size_t>(v)] == fr.edge_of[static_cast<std::size_t>(w)])
        continue;  // pairs must span two distinct matching edges
      if (static_cast<long long>(g.pair_deg_restricted(v, w, vp)) >= aux.c2)
        aux.f2.push_back({v, w});
    }
  }
  for (std::size_t i = 0; i < g.m(); ++i) {
    const auto e = g.edge(i);
    const int e0 = fr.edge_of[static_cast<std::size_t>(e[0])];
    const int e1 = fr.edge_of[static_cast<std::size_t>(e[1])];
    const int e2 = fr.edge_of[static_cast<std::size_t>(e[2])];
    if (e0 < 0 || e1 < 0 || e2 < 0) continue;
    if (e0 == e1 || e0 == e2 || e1 == e2) continue;  // triples span three distinct matching edges
    aux.f3.push_back({e[0], e[1], e[2]});
  }
  std::sort(aux.f2.begin(), aux.f2.end());
  std::sort(aux.f3.begin(), aux.f3.end());
  return aux;
}

// Number of edges whose V(M)-trace lies in none of M, F1, F2, F3.  The empty
// trace counts as untraceable, but a maximum matching leaves no edge entirely
// unsaturated.
inline long long count_untraceable(const Hypergraph& g, const MatchingFrame& fr,
                                   const AuxHypergraph& aux) {
  long long cnt = 0;
  for (std::size_t i = 0; i < g.m(); ++i) {
    std::array<Vertex, 3> t{};
    int ts = 0;
    for (Vertex v : g.edge(i))
      if (fr.saturated(v)) t[static_cast<std::size_t>(ts++)] = v;
    bool traceable = false;
    switch (ts) {
      case 1:
        traceable = aux.has_f1(t[0]);
        break;
      case 2:
        traceable = aux.has_f2(t[0], t[1]);
        break;
      case 3: {
        const int e0 = fr.edge_of[static_cast<std::size_t>(t[0])];
        const bool in_m = e0 == fr.edge_of[static_cast<std::size_t>(t[1])] &&
                          e0 == fr.edge_of[static_cast<std::size_t>(t[2])];
        traceable = in_m || aux.has_f3({t[0], t[1], t[2]});
        break;
      }
      default:
        break;
    }
    if (!traceable) ++cnt;
  }
  return cnt;
}

struct TripleStats {
  std::array<int, 3> triple{};  // matching edge positions, ascending
  int f1 = 0;
  int f2 = 0;
  int f3 = 0;
  bool good = true;
  std::array<int, 3> f2_by_pair{};  // edge pairs (0,1), (0,2), (1,2)
};

namespace detail {

// 3 pairwise disjoint attachment edges inside the 9 vertices whose union
// meets the I class in at most 2 vertices; masks are local 9-bit sets
inline bool disjoint_low_i_witness(std::span<const std::uint32_t> masks,
                                   std::uint32_t i_mask) {
  for (std::size_t a = 0; a < masks.size(); ++a) {
    for (std::size_t b = a + 1; b < masks.size(); ++b) {
      if (masks[a] & masks[b]) continue;
      const std::uint32_t ab = masks[a] | masks[b];
      if (std::popcount(ab & i_mask) > 2) continue;
      for (std::size_t c = b + 1; c < masks.size(); ++c) {
        if (masks[c] & ab) continue;
        if (std::popcount((ab | masks[c]) & i_mask) <= 2) return true;
      }
    }
  }
  return false;
}

}  // namespace detail

// f_i counts of attachment edges inside the union of three matching edges,
// plus the good/bad classification by exhaustive witness search.
inline TripleStats triple_stats(const AuxHypergraph& aux, const MatchingFrame& fr,
                                std::array<int, 3> t) {
  const int s = fr.s();
  if (!(0 <= t[0] && t[0] < t[1] && t[1] < t[2] && t[2] < s))
    throw std::invalid_argument("triple_stats: T must be three distinct matching edges");
  TripleStats st;
  st.triple = t;
  std::array<std::array<Vertex, 3>, 3> v{};
  for (int x = 0; x < 3; ++x) {
    const EdgeTuple& e = fr.m.edges[static_cast<std::size_t>(t[static_cast<std::size_t>(x)])];
    v[static_cast<std::size_t>(x)] = {e[0], e[1], e[2]};
  }
  // local bit p = 3x + c for vertex v[x][c]; the I class sits at c = 0
  const std::uint32_t i_mask = 0b001001001;
  std::vector<std::uint32_t> fedges;
  for (int x = 0; x < 3; ++x) fedges.push_back(0b111u << (3 * x));
  for (int x = 0; x < 3; ++x) {
    for (int c = 0; c < 3; ++c) {
      if (aux.has_f1(v[static_cast<std::size_t>(x)][static_cast<std::size_t>(c)])) {
        ++st.f1;
        fedges.push_back(1u << (3 * x + c));
      }
    }
  }
  const std::array<std::array<int, 2>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (std::size_t p = 0; p < 3; ++p) {
    const int x = pairs[p][0];
    const int y = pairs[p][1];
    for (int cx = 0; cx < 3; ++cx) {
      for (int cy = 0; cy < 3; ++cy) {
        if (aux.has_f2(v[static_cast<std::size_t>(x)][static_cast<std::size_t>(cx)],
                       v[static_cast<std::size_t>(y)][static_cast<std::size_t>(cy)])) {
          ++st.f2_by_pair[p];
          fedges.push_back((1u << (3 * x + cx)) | (1u << (3 * y + cy)));
        }
      }
    }
    st.f2 += st.f2_by_pair[p];
  }
  for (int c0 = 0; c0 < 3; ++c0) {
    for (int c1 = 0; c1 < 3; ++c1) {
      for (int c2 = 0; c2 < 3; ++c2) {
        if (aux.has_f3({v[0][static_cast<std::size_t>(c0)],
                        v[1][static_cast<std::size_t>(c1)],
                        v[2][static_cast<std::size_t>(c2)]})) {
          ++st.f3;
          fedges.push_back((1u << c0) | (1u << (3 + c1)) | (1u << (6 + c2)));
        }
      }
    }
  }
  st.good = !detail::disjoint_low_i_witness(fedges, i_mask);
  return st;
}

// Count table over good triples, keyed by f3: high transversal counts force
// the f1/f2 attachment counts down.  Bad triples pass vacuously.
inline bool good_triple_profile_ok(const TripleStats& st) {
  if (!st.good) return true;
  if (st.f3 >= 24) return st.f1 == 0 && st.f2 == 0;
  if (st.f3 >= 22) return st.f1 == 0 && st.f2 <= 7;
  if (st.f3 == 21) return st.f1 <= 1 && st.f2 <= 10;
  if (st.f3 == 20) return st.f1 <= 1 && st.f2 <= 12;
  return st.f1 <= 3 && st.f2 <= 15;
}

// On a good triple, dense attachment goes through the I class: every F1
// vertex inside the union lies in I, each edge pair carries at most five F2
// pairs, and a full set of five forces every one of them to meet I.  Bad
// triples pass vacuously.
inline bool good_triple_attachment_ok(const AuxHypergraph& aux, const MatchingFrame& fr,
                                      std::array<int, 3> t) {
  const TripleStats st = triple_stats(aux, fr, t);
  if (!st.good) return true;
  std::array<std::array<Vertex, 3>, 3> v{};
  for (int x = 0; x < 3; ++x) {
    const EdgeTuple& e = fr.m.edges[static_cast<std::size_t>(t[static_cast<std::size_t>(x)])];
    v[static_cast<std::size_t>(x)] = {e[0], e[1], e[2]};
  }
  for (const auto& edge : v)
    for (Vertex w : edge)
      if (aux.has_f1(w) && !fr.in_i(w)) return false;
  const std::array<std::array<int, 2>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (std::size_t p = 0; p < 3; ++p) {
    if (st.f2_by_pair[p] > 5) return false;
    if (st.f2_by_pair[p] == 5) {
      const int x = pairs[p][0];
      const int y = pairs[p][1];
      for (int cx = 0; cx < 3; ++cx) {
        for (int cy = 0; cy < 3; ++cy) {
          const Vertex a = v[static_cast<std::size_t>(x)][static_cast<std::size_t>(cx)];
          const Vertex b = v[static_cast<std::size_t>(y)][static_cast<std::size_t>(cy)];
          if (aux.has_f2(a, b) && !fr.in_i(a) && !fr.in_i(b)) return false;
        }
      }
    }
  }
  return true;
}

struct BadTripleCheck {
  std::vector<std::array<int, 3>> bad;  // all bad triples, ascending
  bool no_three_disjoint = true;
  bool small_cover_exists = true;  // at most 6 matching edges hit every bad triple
  std::vector<int> cover;          // a witness cover, edge positions
  bool ok() const { return no_three_disjoint && small_cover_exists; }
};

namespace detail {

inline bool triples_disjoint(const std::array<int, 3>& a, const std::array<int, 3>& b) {
  for (int x : a)
    for (int y : b)
      if (x == y) return false;
  return true;
}

inline bool cover_bad_triples(const std::vector<std::array<int, 3>>& bad,
                              std::vector<int>& chosen) {
  const std::array<int, 3>* open = nullptr;
  for (const auto& t : bad) {
    bool hit = false;
    for (int e : chosen)
      if (e == t[0] || e == t[1] || e == t[2]) {
        hit = true;
        break;
      }
    if (!hit) {
      open = &t;
      break;
    }
  }
  if (open == nullptr) return true;
  if (chosen.size() == 6) return false;
  for (int e : *open) {
    chosen.push_back(e);
    if (cover_bad_triples(bad, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

inline BadTripleCheck check_bad_list(std::vector<std::array<int, 3>> bad) {
  BadTripleCheck out;
  out.bad = std::move(bad);
  for (std::size_t a = 0; a < out.bad.size() && out.no_three_disjoint; ++a) {
    for (std::size_t b = a + 1; b < out.bad.size() && out.no_three_disjoint; ++b) {
      if (!triples_disjoint(out.bad[a], out.bad[b])) continue;
      for (std::size_t c = b + 1; c < out.bad.size(); ++c) {
        if (triples_disjoint(out.bad[a], out.bad[c]) &&
            triples_disjoint(out.bad[b], out.bad[c])) {
          out.no_three_disjoint = false;
          break;
        }
      }
    }
  }
  out.small_cover_exists = cover_bad_triples(out.bad, out.cover);
  if (!out.small_cover_exists) out.cover.clear();
  return out;
}

}  // namespace detail

// Confinement of bad triples: no three pairwise edge-disjoint ones exist, and
// at most six matching edges hit them all (exhaustive bounded cover search).
inline BadTripleCheck bad_triples_check(const AuxHypergraph& aux, const MatchingFrame& fr) {
  std::vector<std::array<int, 3>> bad;
  const int s = fr.s();
  for (int a = 0; a < s; ++a)
    for (int b = a + 1; b < s; ++b)
      for (int c = b + 1; c < s; ++c)
        if (!triple_stats(aux, fr, {a, b, c}).good) bad.push_back({a, b, c});
  return detail::check_bad_list(std::move(bad));
}

inline bool bad_triples_confined(const AuxHypergraph& aux, const MatchingFrame& fr) {
  return bad_triples_check(aux, fr).ok();
}

// Bucket coefficients of the linear form bounding the edge count, as
// functions of r = (n-3s)/s.  The last coefficient is the constant 27; the
// first ties with it exactly at the crossover ratio s/n = (sqrt(321)-3)/52.
inline std::array<double, 5> lp_alpha(double r) {
  return {3 * r * r + 15 * r + 19, r * r + 12 * r + 20, r * r + 10 * r + 21, 7 * r + 23,
          27.0};
}

// Coefficients of the linear form bounding the edge count by bucketed good
// triple counts, with r = (n-3s)/s.  a0 is the ratio where the first and
// last coefficients tie at 27.
struct LpCoefficients {
  int n = 0;
  int s = 0;
  std::array<double, 5> alpha{};  // alpha[4] == 27 always
  std::vector<int> argmax;        // 1-based indices of maximal coefficients, 1e-9 tolerance
  double a0 = 0.0;                // (sqrt(321) - 3) / 52
  std::uint64_t x_cap = 0;        // C(s-6,3), cap on the total bucket mass
};

inline LpCoefficients lp_coefficients(int n, int s) {
  if (s < 1 || 3LL * s > n)
    throw std::invalid_argument("lp_coefficients: requires 1 <= 3s <= n");
  LpCoefficients lp;
  lp.n = n;
  lp.s = s;
  const double r = static_cast<double>(n - 3LL * s) / s;
  lp.alpha = lp_alpha(r);
  const double mx = *std::max_element(lp.alpha.begin(), lp.alpha.end());
  for (int i = 0; i < 5; ++i)
    if (lp.alpha[static_cast<std::size_t>(i)] >= mx - 1e-9) lp.argmax.push_back(i + 1);
  lp.a0 = (std::sqrt(321.0) - 3.0) / 52.0;
  lp.x_cap = static_cast<std::uint64_t>(binom_ll(s - 6, 3));
  return lp;
}

struct EdgeBoundCheck {
  long long edges = 0;           // e(G)
  unsigned long long rhs = 0;    // |F1| C(n-3s,2) + |F2| (n-3s) + |F3| + 40 n^2
  bool holds = false;
};

inline EdgeBoundCheck edge_bound_check(const Hypergraph& g, const MatchingFrame& fr,
                                       const AuxHypergraph& aux) {
  EdgeBoundCheck out;
  const long long n = g.n();
  const long long free_v = n - 3LL * fr.s();
  out.edges = static_cast<long long>(g.m());
  out.rhs = aux.f1.size() * static_cast<unsigned long long>(binom_ll(free_v, 2)) +
            aux.f2.size() * static_cast<unsigned long long>(free_v) + aux.f3.size() +
            40ULL * static_cast<unsigned long long>(n) * static_cast<unsigned long long>(n);
  out.holds = static_cast<unsigned long long>(out.edges) <= out.rhs;
  return out;
}

// Aggregate structural analysis of a 3-graph against its maximum matching:
// attachment sets, untraceable count, per-triple statistics with the profile
// and attachment predicates, bad triple confinement, the double counting
// identity sum_T f_i(T) = |F_i| C(s-i,3-i), the edge bound, and the linear
// coefficients for the instance's (n, s).
struct AnalysisReport {
  MatchingFrame frame;
  AuxHypergraph aux;
  long long untraceable = 0;
  unsigned long long untraceable_bound = 0;  // 31 n^2
  bool untraceable_within_bound = true;
  std::vector<TripleStats> triples;  // all C(s,3), ascending
  long long good_count = 0;
  long long bad_count = 0;
  bool all_profiles_ok = true;
  bool all_attachments_ok = true;
  BadTripleCheck bad_check;
  std::map<std::array<int, 3>, long long> profile_histogram;  // (f1,f2,f3) -> count
  std::array<long long, 5> x_histogram{};  // good triples bucketed by f3:
                                           // <=19, 20, 21, 22..23, >=24
  std::array<long long, 3> f_sums{};       // sum_T f_i(T)
  std::array<unsigned long long, 3> f_sums_expected{};  // |F_i| C(s-i,3-i)
  bool double_count_ok = true;
  EdgeBoundCheck edge_bound;
  std::optional<LpCoefficients> lp;  // absent when s = 0
};

inline AnalysisReport analyze(const Hypergraph& g, long long c1 = -1, long long c2 = -1) {
  AnalysisReport rep;
  rep.frame = build_frame(g);
  rep.aux = build_aux(g, rep.frame, c1, c2);
  rep.untraceable = count_untraceable(g, rep.frame, rep.aux);
  const auto un = static_cast<unsigned long long>(g.n());
  rep.untraceable_bound = 31ULL * un * un;
  rep.untraceable_within_bound =
      static_cast<unsigned long long>(rep.untraceable) <= rep.untraceable_bound;
  const int s = rep.frame.s();
  std::vector<std::array<int, 3>> bad;
  for (int a = 0; a < s; ++a) {
    for (int b = a + 1; b < s; ++b) {
      for (int c = b + 1; c < s; ++c) {
        TripleStats st = triple_stats(rep.aux, rep.frame, {a, b, c});
        if (st.good) {
          ++rep.good_count;
          const std::size_t bucket = st.f3 <= 19  ? 0
                                     : st.f3 == 20 ? 1
                                     : st.f3 == 21 ? 2
                                     : st.f3 <= 23 ? 3
                                                   : 4;
          ++rep.x_histogram[bucket];
          if (!good_triple_attachment_ok(rep.aux, rep.frame, st.triple))
            rep.all_attachments_ok = false;
        } else {
          ++rep.bad_count;
          bad.push_back(st.triple);
        }
        if (!good_triple_profile_ok(st)) rep.all_profiles_ok = false;
        ++rep.profile_histogram[{st.f1, st.f2, st.f3}];
        rep.f_sums[0] += st.f1;
        rep.f_sums[1] += st.f2;
        rep.f_sums[2] += st.f3;
        rep.triples.push_back(std::move(st));
      }
    }
  }
  rep.bad_check = detail::check_bad_list(std::move(bad));
  for (int i = 1; i <= 3; ++i) {
    const auto size = i == 1 ? rep.aux.f1.size() : i == 2 ? rep.aux.f2.size() : rep.aux.f3.size();
    rep.f_sums_expected[static_cast<std::size_t>(i - 1)] =
        size * static_cast<unsigned long long>(binom_ll(s - i, 3 - i));
    if (static_cast<unsigned long long>(rep.f_sums[static_cast<std::size_t>(i - 1)]) !=
        rep.f_sums_expected[static_cast<std::size_t>(i - 1)])
      rep.double_count_ok = false;
  }
  rep.edge_bound = edge_bound_check(g, rep.frame, rep.aux);
  if (s >= 1) rep.lp = lp_coefficients(g.n(), s);
  return rep;
}

}  // namespace hypermatch

#endif  // HYPERMATCH_STRUCTURE_HPP_
