#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "hypermatch/extremal.hpp"
#include "hypermatch/structure.hpp"

using namespace hypermatch;

namespace {

Hypergraph from_tuples(int n, std::vector<EdgeTuple> edges) {
  return Hypergraph::build(n, 3, edges);
}

// matching {1,2,3},{4,5,6},{7,8,9}; the two extra edges give vertex 2 a high
// completion count into the free vertices, so F1 = {2} at threshold 2 and the
// sole triple has {2}, {4,5,6}, {7,8,9} as disjoint attachment edges meeting
// class I only in {4,7}
Hypergraph single_bad_instance() {
  return from_tuples(12, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {2, 10, 11}, {2, 10, 12}});
}

// nine matching edges in three blocks of three; inside block b (vertices
// 9b+1..9b+9) two extra edges land in F3 and one pair {9b+1, 9b+4} lands in
// F2 via a carrier through a free vertex, making each block's triple bad;
// the three bad triples are pairwise disjoint
Hypergraph three_disjoint_bad_instance() {
  std::vector<EdgeTuple> edges;
  for (int l = 1; l <= 9; ++l) edges.push_back({3 * l - 2, 3 * l - 1, 3 * l});
  for (int b = 0; b < 3; ++b) {
    const int v = 9 * b;
    edges.push_back({v + 2, v + 5, v + 8});
    edges.push_back({v + 3, v + 6, v + 9});
    edges.push_back({v + 1, v + 4, 28 + b});
  }
  return from_tuples(30, edges);
}

}  // namespace

TEST_CASE("frame labels the maximum matching classes and the free vertices") {
  const Hypergraph cov = construct_cov(200, 3, 10).first;
  MatchingFrame fr = build_frame(cov);
  REQUIRE(fr.s() == 10);
  CHECK(fr.input_shifted);
  for (int l = 0; l < 10; ++l) {
    CHECK(fr.i_of[static_cast<std::size_t>(l)] == l + 1);
    CHECK(fr.j_of[static_cast<std::size_t>(l)] == 9 + 2 * (l + 1));
    CHECK(fr.k_of[static_cast<std::size_t>(l)] == 10 + 2 * (l + 1));
    CHECK(fr.edge_of[static_cast<std::size_t>(l + 1)] == l);
  }
  // K vertices ascend across the matching
  for (int l = 0; l + 1 < 10; ++l)
    CHECK(fr.k_of[static_cast<std::size_t>(l)] < fr.k_of[static_cast<std::size_t>(l + 1)]);
  REQUIRE(fr.v_prime.size() == 170);
  CHECK(fr.v_prime.front() == 31);
  CHECK(fr.v_prime.back() == 200);
  CHECK(fr.in_i(3));
  CHECK_FALSE(fr.in_i(11));
  CHECK_FALSE(fr.in_i(31));
  CHECK(fr.saturated(30));
  CHECK_FALSE(fr.saturated(31));

  const Hypergraph cl = construct_cl(100, 3, 30).first;
  MatchingFrame fc = build_frame(cl);
  REQUIRE(fc.s() == 30);
  CHECK(fc.input_shifted);
  for (int l = 0; l < 30; ++l) {
    CHECK(fc.i_of[static_cast<std::size_t>(l)] == 3 * l + 1);
    CHECK(fc.j_of[static_cast<std::size_t>(l)] == 3 * l + 2);
    CHECK(fc.k_of[static_cast<std::size_t>(l)] == 3 * l + 3);
  }
  REQUIRE(fc.v_prime.size() == 10);
  CHECK(fc.v_prime.front() == 91);

  MatchingFrame fe = build_frame(from_tuples(9, {}));
  CHECK(fe.s() == 0);
  CHECK(fe.v_prime.size() == 9);
  CHECK(fe.input_shifted);

  CHECK(build_frame(single_bad_instance()).input_shifted == false);
  CHECK_THROWS_AS(build_frame(construct_cov(9, 2, 2).first), std::invalid_argument);
}

TEST_CASE("attachment sets on the cover construction") {
  const Hypergraph g = construct_cov(200, 3, 10).first;
  MatchingFrame fr = build_frame(g);
  AuxHypergraph aux = build_aux(g, fr);
  CHECK(aux.c1 == 4000);
  CHECK(aux.c2 == 20);
  // exactly the cover vertices complete into two free vertices C(170,2) times
  REQUIRE(aux.f1.size() == 10);
  for (int v = 1; v <= 10; ++v) CHECK(aux.has_f1(v));
  CHECK_FALSE(aux.has_f1(11));
  // cross-matching pairs complete iff they meet the cover: 45 inside, 180 mixed
  CHECK(aux.f2.size() == 225);
  std::size_t both_in_i = 0;
  for (const auto& p : aux.f2) {
    CHECK(p[0] < p[1]);
    CHECK((fr.in_i(p[0]) || fr.in_i(p[1])));
    both_in_i += fr.in_i(p[0]) && fr.in_i(p[1]);
  }
  CHECK(both_in_i == 45);
  CHECK(aux.has_f2(1, 13));
  CHECK(aux.has_f2(13, 1));  // order insensitive
  CHECK_FALSE(aux.has_f2(11, 13));
  CHECK_FALSE(aux.has_f2(1, 11));  // same matching edge
  // host edges across three matching edges must meet the cover
  CHECK(aux.f3.size() == 2280);
  CHECK(aux.has_f3({1, 13, 15}));
  CHECK(aux.has_f3({15, 13, 1}));
  CHECK_FALSE(aux.has_f3({11, 13, 15}));
}

TEST_CASE("attachment sets on the clique construction") {
  const Hypergraph g = construct_cl(100, 3, 30).first;
  MatchingFrame fr = build_frame(g);
  AuxHypergraph aux = build_aux(g, fr);
  CHECK(aux.c1 == 2000);
  // only two free vertices lie inside the clique, far below both thresholds
  CHECK(aux.f1.empty());
  CHECK(aux.f2.empty());
  // every cross-matching triple inside the clique is an edge
  CHECK(aux.f3.size() == binom(30, 3) * 27);
  CHECK(aux.has_f3({1, 4, 7}));
  CHECK_FALSE(aux.has_f3({1, 4, 91}));
}

TEST_CASE("untraceable edges are counted literally") {
  {
    const Hypergraph g = construct_cov(200, 3, 10).first;
    MatchingFrame fr = build_frame(g);
    AuxHypergraph aux = build_aux(g, fr);
    // pair traces inside one matching edge are never in F2, and triples
    // spanning exactly two matching edges are never in F3
    CHECK(count_untraceable(g, fr, aux) == 4030);
  }
  {
    const Hypergraph g = construct_cl(100, 3, 30).first;
    MatchingFrame fr = build_frame(g);
    AuxHypergraph aux = build_aux(g, fr);
    CHECK(count_untraceable(g, fr, aux) == 15930);
  }
  {
    // {2,4,5} traces to {2}, {2,3,6} traces to a within-edge pair
    const Hypergraph g = from_tuples(7, {{1, 2, 3}, {2, 4, 5}, {2, 3, 6}});
    MatchingFrame fr = build_frame(g);
    REQUIRE(fr.s() == 1);
    AuxHypergraph lax = build_aux(g, fr, 1, -1);
    CHECK(lax.f1 == std::vector<Vertex>{2});
    CHECK(count_untraceable(g, fr, lax) == 1);
    AuxHypergraph strict = build_aux(g, fr);
    CHECK(strict.f1.empty());
    CHECK(count_untraceable(g, fr, strict) == 2);
  }
}

TEST_CASE("triple statistics on both constructions") {
  {
    const Hypergraph g = construct_cov(200, 3, 10).first;
    MatchingFrame fr = build_frame(g);
    AuxHypergraph aux = build_aux(g, fr);
    for (auto t : {std::array<int, 3>{0, 1, 2}, {2, 5, 9}, {7, 8, 9}}) {
      TripleStats st = triple_stats(aux, fr, t);
      CHECK(st.f1 == 3);
      CHECK(st.f2 == 15);
      CHECK(st.f3 == 19);
      CHECK(st.good);
      CHECK(st.f2_by_pair == std::array<int, 3>{5, 5, 5});
    }
    CHECK_THROWS_AS(triple_stats(aux, fr, {0, 1, 10}), std::invalid_argument);
    CHECK_THROWS_AS(triple_stats(aux, fr, {1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(triple_stats(aux, fr, {-1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(triple_stats(aux, fr, {2, 1, 0}), std::invalid_argument);
  }
  {
    const Hypergraph g = construct_cl(100, 3, 30).first;
    MatchingFrame fr = build_frame(g);
    AuxHypergraph aux = build_aux(g, fr);
    TripleStats st = triple_stats(aux, fr, {0, 14, 29});
    CHECK(st.f1 == 0);
    CHECK(st.f2 == 0);
    CHECK(st.f3 == 27);
    CHECK(st.good);
  }
}

TEST_CASE("profile table accepts exactly the tabulated attachment counts") {
  auto st = [](int f1, int f2, int f3, bool good = true) {
    TripleStats s;
    s.f1 = f1;
    s.f2 = f2;
    s.f3 = f3;
    s.good = good;
    return s;
  };
  // top band: no attachments at all
  CHECK(good_triple_profile_ok(st(0, 0, 27)));
  CHECK(good_triple_profile_ok(st(0, 0, 24)));
  CHECK_FALSE(good_triple_profile_ok(st(1, 0, 24)));
  CHECK_FALSE(good_triple_profile_ok(st(0, 1, 24)));
  // 22..23
  CHECK(good_triple_profile_ok(st(0, 7, 22)));
  CHECK_FALSE(good_triple_profile_ok(st(0, 8, 23)));
  CHECK_FALSE(good_triple_profile_ok(st(1, 0, 22)));
  // 21
  CHECK(good_triple_profile_ok(st(1, 10, 21)));
  CHECK_FALSE(good_triple_profile_ok(st(2, 0, 21)));
  CHECK_FALSE(good_triple_profile_ok(st(0, 11, 21)));
  // 20
  CHECK(good_triple_profile_ok(st(1, 12, 20)));
  CHECK_FALSE(good_triple_profile_ok(st(0, 13, 20)));
  // bottom band
  CHECK(good_triple_profile_ok(st(3, 15, 19)));
  CHECK(good_triple_profile_ok(st(3, 15, 0)));
  CHECK_FALSE(good_triple_profile_ok(st(4, 0, 19)));
  CHECK_FALSE(good_triple_profile_ok(st(0, 16, 5)));
  // bad triples pass vacuously
  CHECK(good_triple_profile_ok(st(9, 45, 27, false)));
}

TEST_CASE("attachment claim holds on every cover triple") {
  // any violation would itself yield three disjoint attachment edges meeting
  // class I at most twice, so good triples cannot break the claim; here the
  // claim is exercised on a construction where every count is at its cap
  const Hypergraph g = construct_cov(200, 3, 10).first;
  MatchingFrame fr = build_frame(g);
  AuxHypergraph aux = build_aux(g, fr);
  for (int a = 0; a < 10; ++a)
    for (int b = a + 1; b < 10; ++b)
      for (int c = b + 1; c < 10; ++c)
        CHECK(good_triple_attachment_ok(aux, fr, {a, b, c}));
}

TEST_CASE("bad triple detection distinguishes the synthetic instances") {
  {
    const Hypergraph g = single_bad_instance();
    MatchingFrame fr = build_frame(g);
    REQUIRE(fr.s() == 3);
    AuxHypergraph aux = build_aux(g, fr, 2, -1);
    CHECK(aux.f1 == std::vector<Vertex>{2});
    CHECK(aux.f2.empty());
    CHECK(aux.f3.empty());
    TripleStats st = triple_stats(aux, fr, {0, 1, 2});
    CHECK(st.f1 == 1);
    CHECK(st.f2 == 0);
    CHECK(st.f3 == 0);
    CHECK_FALSE(st.good);
    BadTripleCheck bc = bad_triples_check(aux, fr);
    REQUIRE(bc.bad.size() == 1);
    CHECK(bc.no_three_disjoint);
    CHECK(bc.small_cover_exists);
    CHECK(bc.cover == std::vector<int>{0});
    CHECK(bad_triples_confined(aux, fr));
    // at the default threshold F1 is empty and the triple turns good
    AuxHypergraph strict = build_aux(g, fr);
    CHECK(triple_stats(strict, fr, {0, 1, 2}).good);
  }
  {
    const Hypergraph g = three_disjoint_bad_instance();
    MatchingFrame fr = build_frame(g);
    REQUIRE(fr.s() == 9);
    AuxHypergraph aux = build_aux(g, fr, 1, 1);
    CHECK(aux.f1.empty());
    CHECK(aux.f2.size() == 3);
    CHECK(aux.f3.size() == 6);
    TripleStats st = triple_stats(aux, fr, {0, 1, 2});
    CHECK(st.f1 == 0);
    CHECK(st.f2 == 1);
    CHECK(st.f3 == 2);
    CHECK_FALSE(st.good);
    CHECK(triple_stats(aux, fr, {0, 1, 3}).good);
    BadTripleCheck bc = bad_triples_check(aux, fr);
    REQUIRE(bc.bad.size() == 3);
    CHECK(bc.bad[0] == std::array<int, 3>{0, 1, 2});
    CHECK(bc.bad[1] == std::array<int, 3>{3, 4, 5});
    CHECK(bc.bad[2] == std::array<int, 3>{6, 7, 8});
    CHECK_FALSE(bc.no_three_disjoint);
    CHECK(bc.small_cover_exists);
    CHECK_FALSE(bc.ok());
    CHECK_FALSE(bad_triples_confined(aux, fr));
  }
}

TEST_CASE("bad list confinement logic on hand built lists") {
  using detail::check_bad_list;
  {
    BadTripleCheck bc = check_bad_list({});
    CHECK(bc.ok());
    CHECK(bc.cover.empty());
  }
  {
    // a common edge blocks disjointness and covers everything
    BadTripleCheck bc = check_bad_list({{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {0, 7, 8}});
    CHECK(bc.no_three_disjoint);
    CHECK(bc.cover == std::vector<int>{0});
    CHECK(bc.ok());
  }
  {
    // two disjoint triples plus a bridge still admit a two edge cover
    BadTripleCheck bc = check_bad_list({{0, 1, 2}, {3, 4, 5}, {2, 3, 9}});
    CHECK(bc.no_three_disjoint);
    CHECK(bc.cover == std::vector<int>{0, 3});
    CHECK(bc.ok());
  }
  {
    std::vector<std::array<int, 3>> seven;
    for (int a = 0; a < 7; ++a) seven.push_back({3 * a, 3 * a + 1, 3 * a + 2});
    BadTripleCheck bc = check_bad_list(seven);
    CHECK_FALSE(bc.no_three_disjoint);
    CHECK_FALSE(bc.small_cover_exists);
    CHECK(bc.cover.empty());
    CHECK_FALSE(bc.ok());
  }
}

TEST_CASE("aggregate analysis of the cover construction") {
  AnalysisReport rep = analyze(construct_cov(200, 3, 10).first);
  CHECK(rep.frame.s() == 10);
  CHECK(rep.untraceable == 4030);
  CHECK(rep.untraceable_bound == 31ULL * 200 * 200);
  CHECK(rep.untraceable_within_bound);
  CHECK(rep.triples.size() == 120);
  CHECK(rep.good_count == 120);
  CHECK(rep.bad_count == 0);
  CHECK(rep.all_profiles_ok);
  CHECK(rep.all_attachments_ok);
  CHECK(rep.bad_check.ok());
  REQUIRE(rep.profile_histogram.size() == 1);
  CHECK(rep.profile_histogram.at({3, 15, 19}) == 120);
  CHECK(rep.x_histogram == std::array<long long, 5>{120, 0, 0, 0, 0});
  CHECK(rep.f_sums == std::array<long long, 3>{360, 1800, 2280});
  CHECK(rep.f_sums_expected == std::array<unsigned long long, 3>{360, 1800, 2280});
  CHECK(rep.double_count_ok);
  CHECK(rep.edge_bound.edges == 188220);
  CHECK(rep.edge_bound.rhs == 1784180);
  CHECK(rep.edge_bound.holds);
  REQUIRE(rep.lp.has_value());
  // r = 17
  CHECK(rep.lp->alpha[0] == Catch::Approx(1141.0));
  CHECK(rep.lp->argmax == std::vector<int>{1});
  CHECK(rep.lp->x_cap == 4);
}

TEST_CASE("aggregate analysis of the clique construction") {
  AnalysisReport rep = analyze(construct_cl(100, 3, 30).first);
  CHECK(rep.frame.s() == 30);
  CHECK(rep.untraceable == 15930);
  CHECK(rep.untraceable_bound == 310000);
  CHECK(rep.untraceable_within_bound);
  CHECK(rep.good_count == 4060);
  CHECK(rep.bad_count == 0);
  CHECK(rep.all_profiles_ok);
  CHECK(rep.all_attachments_ok);
  CHECK(rep.bad_check.ok());
  REQUIRE(rep.profile_histogram.size() == 1);
  CHECK(rep.profile_histogram.at({0, 0, 27}) == 4060);
  CHECK(rep.x_histogram == std::array<long long, 5>{0, 0, 0, 0, 4060});
  CHECK(rep.f_sums == std::array<long long, 3>{0, 0, 109620});
  CHECK(rep.double_count_ok);
  CHECK(rep.edge_bound.edges == 125580);
  CHECK(rep.edge_bound.rhs == 509620);
  CHECK(rep.edge_bound.holds);
  REQUIRE(rep.lp.has_value());
  CHECK(rep.lp->argmax == std::vector<int>{5});
  CHECK(rep.lp->x_cap == binom(24, 3));
}

TEST_CASE("aggregate analysis of synthetic and degenerate instances") {
  {
    AnalysisReport rep = analyze(single_bad_instance(), 2, -1);
    CHECK(rep.bad_count == 1);
    CHECK(rep.good_count == 0);
    CHECK(rep.bad_check.ok());
    CHECK(rep.untraceable == 0);
    CHECK(rep.double_count_ok);
    CHECK(rep.profile_histogram.at({1, 0, 0}) == 1);
    CHECK(rep.x_histogram == std::array<long long, 5>{0, 0, 0, 0, 0});
    REQUIRE(rep.lp.has_value());
    CHECK(rep.lp->x_cap == 0);
  }
  {
    AnalysisReport rep = analyze(three_disjoint_bad_instance(), 1, 1);
    CHECK(rep.bad_count == 3);
    CHECK(rep.good_count == 81);
    CHECK_FALSE(rep.bad_check.ok());
    CHECK(rep.f_sums == std::array<long long, 3>{0, 21, 6});
    CHECK(rep.f_sums_expected == std::array<unsigned long long, 3>{0, 21, 6});
    CHECK(rep.double_count_ok);
    CHECK(rep.edge_bound.holds);
  }
  {
    // no edges: empty frame, no triples, no lp block
    AnalysisReport rep = analyze(from_tuples(9, {}));
    CHECK(rep.frame.s() == 0);
    CHECK(rep.untraceable == 0);
    CHECK(rep.triples.empty());
    CHECK(rep.double_count_ok);
    CHECK(rep.edge_bound.holds);
    CHECK_FALSE(rep.lp.has_value());
  }
}

TEST_CASE("linear coefficients across the ratio range") {
  LpCoefficients lp = lp_coefficients(60, 15);  // r = 1
  CHECK(lp.alpha[0] == Catch::Approx(37.0));
  CHECK(lp.alpha[1] == Catch::Approx(33.0));
  CHECK(lp.alpha[2] == Catch::Approx(32.0));
  CHECK(lp.alpha[3] == Catch::Approx(30.0));
  CHECK(lp.alpha[4] == 27.0);
  CHECK(lp.argmax == std::vector<int>{1});
  CHECK(lp.a0 == Catch::Approx((std::sqrt(321.0) - 3.0) / 52.0).epsilon(1e-15));
  CHECK(lp.x_cap == binom(9, 3));

  CHECK_THROWS_AS(lp_coefficients(10, 0), std::invalid_argument);
  CHECK_THROWS_AS(lp_coefficients(10, 4), std::invalid_argument);

  // the first coefficient dominates below the crossover ratio and the
  // constant dominates above it
  const double a0 = lp.a0;
  const int n = 1000000;
  for (int t = 0; t < 100; ++t) {
    const double ratio = 0.05 + (0.33 - 0.05) * (t + 0.5) / 100.0;
    const int s = static_cast<int>(std::llround(ratio * n));
    const double actual = static_cast<double>(s) / n;
    if (std::abs(actual - a0) < 0.005) continue;
    LpCoefficients grid = lp_coefficients(n, s);
    if (actual < a0)
      CHECK(grid.argmax == std::vector<int>{1});
    else
      CHECK(grid.argmax == std::vector<int>{5});
  }

  // at the crossover ratio the first and last coefficients tie at 27
  const double r_star = 1.0 / a0 - 3.0;
  const std::array<double, 5> tie = lp_alpha(r_star);
  CHECK(std::abs(tie[0] - 27.0) < 1e-9);
  CHECK(tie[4] == 27.0);
  for (int i = 1; i <= 3; ++i) CHECK(tie[static_cast<std::size_t>(i)] < 27.0);
}
