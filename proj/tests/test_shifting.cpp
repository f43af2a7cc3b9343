#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "hypermatch/matching.hpp"
#include "hypermatch/shifting.hpp"
#include "oracles.hpp"

using namespace hypermatch;

namespace {

Hypergraph complete_3graph(int n) {
  std::vector<EdgeTuple> edges;
  for_each_k_subset(n, 3, [&](std::span<const int> a) {
    edges.emplace_back(a.begin(), a.end());
  });
  return Hypergraph::build(n, 3, edges);
}

Hypergraph cover_family(int n, int s) {
  std::vector<EdgeTuple> edges;
  for_each_k_subset(n, 3, [&](std::span<const int> a) {
    if (a[0] <= s) edges.emplace_back(a.begin(), a.end());
  });
  return Hypergraph::build(n, 3, edges);
}

}  // namespace

TEST_CASE("shift_ij moves, keeps, and validates") {
  Hypergraph g1 = Hypergraph::build(4, 3, std::vector<EdgeTuple>{{2, 3, 4}});
  ShiftReport r1 = shift_ij(g1, 1, 2);
  CHECK(r1.moved == 1);
  CHECK(r1.result.edge_tuple(0) == EdgeTuple{1, 3, 4});

  Hypergraph g2 = Hypergraph::build(4, 3, std::vector<EdgeTuple>{{1, 3, 4}, {2, 3, 4}});
  ShiftReport r2 = shift_ij(g2, 1, 2);
  CHECK(r2.moved == 0);
  CHECK(r2.result == g2);

  Hypergraph g3 = Hypergraph::build(5, 3, std::vector<EdgeTuple>{{1, 2, 5}});
  ShiftReport r3 = shift_ij(g3, 1, 2);
  CHECK(r3.moved == 0);
  CHECK(r3.result == g3);

  CHECK_THROWS_AS(shift_ij(g1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(shift_ij(g1, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(shift_ij(g1, 1, 9), std::invalid_argument);
}

TEST_CASE("shift_ij preserves edge count and never raises the matching number") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 8);  // 5..12
    const int m = 1 + static_cast<int>(rng() % 30);
    Hypergraph g = oracles::random_hypergraph(n, 3, m, rng);
    const int mu = matching_number(g);
    const int i = 1 + static_cast<int>(rng() % (n - 1));
    const int j = i + 1 + static_cast<int>(rng() % (n - i));
    ShiftReport r = shift_ij(g, i, j);
    CAPTURE(n, g.m(), i, j, trial);
    CHECK(r.result.m() == g.m());
    CHECK(matching_number(r.result) <= mu);
    CHECK((r.moved == 0) == (r.result == g));

    // idempotence
    ShiftReport rr = shift_ij(r.result, i, j);
    CHECK(rr.moved == 0);
    CHECK(rr.result == r.result);
  }
}

TEST_CASE("shift_ij exhaustive on 2-graphs with n = 4") {
  // all 2^6 graph on {1..4}, all pairs (i,j)
  std::vector<EdgeTuple> all;
  for_each_k_subset(4, 2, [&](std::span<const int> a) {
    all.emplace_back(a.begin(), a.end());
  });
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<EdgeTuple> edges;
    for (unsigned b = 0; b < 6; ++b)
      if (mask & (1u << b)) edges.push_back(all[b]);
    Hypergraph g = Hypergraph::build(4, 2, edges);
    const int mu = oracles::naive_mu(g);
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) {
        ShiftReport r = shift_ij(g, i, j);
        CHECK(r.result.m() == g.m());
        CHECK(oracles::naive_mu(r.result) <= mu);
      }
  }
}

TEST_CASE("shift_closure fixed examples") {
  Hypergraph g = Hypergraph::build(4, 3, std::vector<EdgeTuple>{{2, 3, 4}});
  Hypergraph c = shift_closure(g);
  CHECK(c.edge_tuple(0) == EdgeTuple{1, 2, 3});

  Hypergraph k6 = complete_3graph(6);
  CHECK(shift_closure(k6) == k6);

  Hypergraph cov = cover_family(9, 2);
  std::size_t moves = 0, sweeps = 0;
  Hypergraph cc = shift_closure(cov, SweepOrder::lexicographic, &moves, &sweeps);
  CHECK(cc == cov);
  CHECK(moves == 0);
  CHECK(sweeps == 1);
}

TEST_CASE("shift_closure yields shifted families and preserves e") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 9);  // 4..12
    const int m = 1 + static_cast<int>(rng() % 25);
    Hypergraph g = oracles::random_hypergraph(n, 3, m, rng);
    Hypergraph c = shift_closure(g);
    CAPTURE(n, g.m(), trial);
    CHECK(c.m() == g.m());
    CHECK(is_shifted(c));
    CHECK(oracles::naive_is_shifted(c));
    CHECK(matching_number(c) <= matching_number(g));
  }
}

TEST_CASE("closure fixpoints can depend on the sweep order") {
  // star vs triangle: the smallest family where the two sweep schedules land
  // on different shifted fixpoints (so no order-independence test is run as a
  // universal property; both results must still be valid closures)
  Hypergraph g = Hypergraph::build(4, 2, std::vector<EdgeTuple>{{1, 2}, {2, 3}, {1, 4}});
  Hypergraph lex = shift_closure(g, SweepOrder::lexicographic);
  Hypergraph rev = shift_closure(g, SweepOrder::reverse);
  CHECK(lex == Hypergraph::build(4, 2, std::vector<EdgeTuple>{{1, 2}, {1, 3}, {1, 4}}));
  CHECK(rev == Hypergraph::build(4, 2, std::vector<EdgeTuple>{{1, 2}, {1, 3}, {2, 3}}));
  CHECK_FALSE(lex == rev);

  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 7);
    const int m = 1 + static_cast<int>(rng() % 20);
    Hypergraph h = oracles::random_hypergraph(n, 3, m, rng);
    const int mu = matching_number(h);
    for (SweepOrder order : {SweepOrder::lexicographic, SweepOrder::reverse}) {
      Hypergraph c = shift_closure(h, order);
      CHECK(c.m() == h.m());
      CHECK(is_shifted(c));
      CHECK(matching_number(c) <= mu);
    }
  }
}

TEST_CASE("is_shifted agrees with the literal definition") {
  CHECK(is_shifted(Hypergraph::build(3, 3, std::vector<EdgeTuple>{{1, 2, 3}})));
  CHECK_FALSE(is_shifted(Hypergraph::build(4, 3, std::vector<EdgeTuple>{{2, 3, 4}})));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 6);
    const int m = 1 + static_cast<int>(rng() % 12);
    Hypergraph g = oracles::random_hypergraph(n, 3, m, rng);
    CHECK(is_shifted(g) == oracles::naive_is_shifted(g));
  }
}

TEST_CASE("dominance order") {
  EdgeTuple a = {1, 3, 4}, b = {2, 3, 4}, c = {1, 2, 5}, d = {1, 3, 4};
  CHECK(dominance_leq(a, b));
  CHECK_FALSE(dominance_leq(c, a));
  CHECK(dominance_leq(a, d));
  EdgeTuple short_one = {1, 2};
  CHECK_THROWS_AS(dominance_leq(short_one, a), std::invalid_argument);
}

TEST_CASE("two-coloring dichotomy witnesses") {
  const auto red_all = std::vector<Color>(10, Color::red);
  auto w1 = two_coloring_witness(5, 3, red_all);
  REQUIRE(std::holds_alternative<Monochrome>(w1));
  CHECK(std::get<Monochrome>(w1).color == Color::red);

  // pairs of {1..5} in colex order; rank 0 is {1,2}
  std::vector<Color> colors(10, Color::blue);
  colors[0] = Color::red;
  auto w2 = two_coloring_witness(5, 3, colors);
  REQUIRE(std::holds_alternative<DisjointPair>(w2));
  const auto& p = std::get<DisjointPair>(w2);
  CHECK(p.first == std::vector<int>{1, 2});
  CHECK(p.second == std::vector<int>{3, 4});
  CHECK(p.first_color == Color::red);
  CHECK(p.second_color == Color::blue);

  CHECK_THROWS_AS(two_coloring_witness(4, 3, colors), std::invalid_argument);
  CHECK_THROWS_AS(two_coloring_witness(5, 3, std::vector<Color>(9, Color::red)),
                  std::invalid_argument);
}

TEST_CASE("coloring index matches the direct scan on all n=5 colorings") {
  TwoColoringIndex ix(5, 3);
  REQUIRE(ix.count() == 10);
  std::vector<Color> colors(10);
  for (std::uint64_t red = 0; red < 1024; ++red) {
    for (int r = 0; r < 10; ++r)
      colors[static_cast<std::size_t>(r)] = ((red >> r) & 1) ? Color::red : Color::blue;
    auto fast = ix.first_bichromatic_disjoint(red);
    auto slow = two_coloring_witness(5, 3, colors);
    if (fast.has_value()) {
      REQUIRE(std::holds_alternative<DisjointPair>(slow));
      const auto& p = std::get<DisjointPair>(slow);
      CHECK(ix.subsets()[static_cast<std::size_t>(fast->first)] == p.first);
      CHECK(ix.subsets()[static_cast<std::size_t>(fast->second)] == p.second);
    } else {
      CHECK(std::holds_alternative<Monochrome>(slow));
      CHECK((red == 0 || red == 1023));
    }
  }
}
