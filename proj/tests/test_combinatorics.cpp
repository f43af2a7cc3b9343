#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "hypermatch/combinatorics.hpp"

using namespace hypermatch;

TEST_CASE("binom basic values") {
  CHECK(binom(0, 0) == 1);
  CHECK(binom(5, 0) == 1);
  CHECK(binom(5, 5) == 1);
  CHECK(binom(5, 2) == 10);
  CHECK(binom(6, 3) == 20);
  CHECK(binom(9, 3) == 84);
  CHECK(binom(2, 3) == 0);
  CHECK(binom(200, 3) == 1313400);
  CHECK(binom(190, 3) == 1125180);
  CHECK(binom(92, 3) == 125580);
  CHECK(binom(3000, 3) == 4495501000ULL);
  CHECK(binom(64, 32) == 1832624140942590534ULL);
  CHECK(binom(67, 33) == 14226520737620288370ULL);
}

TEST_CASE("binom overflow detection") {
  CHECK_THROWS_AS(binom(68, 34), std::overflow_error);
  CHECK_THROWS_AS(binom(200, 100), std::overflow_error);
}

TEST_CASE("binom_ll guards") {
  CHECK(binom_ll(-1, 2) == 0);
  CHECK(binom_ll(5, -2) == 0);
  CHECK(binom_ll(3, 5) == 0);
  CHECK(binom_ll(10, 4) == 210);
}

TEST_CASE("next_k_subset walks colex order") {
  std::vector<int> a = {1, 2, 3};
  const std::vector<std::vector<int>> expect = {
      {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5},
      {1, 3, 5}, {2, 3, 5}, {1, 4, 5}, {2, 4, 5}, {3, 4, 5}};
  std::vector<std::vector<int>> got;
  do {
    got.push_back(a);
  } while (next_k_subset(a, 5));
  CHECK(got == expect);
  CHECK(a == std::vector<int>{3, 4, 5});
}

TEST_CASE("for_each_k_subset counts and ranks") {
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::uint64_t count = 0;
      bool ranks_sequential = true;
      std::vector<int> prev;
      bool order_ok = true;
      for_each_k_subset(n, k, [&](std::span<const int> s) {
        if (colex_rank(s) != count) ranks_sequential = false;
        if (!prev.empty() && !colex_less(prev, s)) order_ok = false;
        prev.assign(s.begin(), s.end());
        ++count;
      });
      CHECK(count == binom(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)));
      CHECK(ranks_sequential);
      CHECK(order_ok);
    }
  }
}

TEST_CASE("colex_less compares from the last coordinate") {
  std::vector<int> a = {1, 2, 9};
  std::vector<int> b = {3, 4, 5};
  CHECK(colex_less(b, a));
  CHECK_FALSE(colex_less(a, b));
  CHECK_FALSE(colex_less(a, a));
}
