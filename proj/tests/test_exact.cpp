#include <random>

#include "doctest.h"
#include "isobound/catalog.hpp"
#include "isobound/error.hpp"
#include "isobound/exact.hpp"
#include "oracles.hpp"

using namespace isobound;

TEST_CASE("independence number examples") {
  CHECK(independence_number(make_cycle(5)).size == 2);
  CHECK(independence_number(make_kneser(5, 2)).size == 4);
  CHECK(independence_number(catalog_graph("clebsch")).size == 5);
  CHECK(independence_number(make_empty(1)).size == 1);
  CHECK(independence_number(make_complete(9)).size == 1);
  CHECK(independence_number(make_empty(64)).size == 64);
  CHECK_THROWS_AS(independence_number(make_cycle(65)), SizeLimitError);
}

TEST_CASE("clique number examples") {
  CHECK(clique_number(catalog_graph("clebsch")) == 2);
  CHECK(clique_number(make_complete(7)) == 7);
  CHECK(clique_number(make_kneser(5, 2)) == 2);
}

TEST_CASE("catalog alphas against brute force") {
  for (const auto &g : catalog_graphs()) {
    if (g.order() > 20)
      continue;
    CAPTURE(g.label());
    auto w = independence_number(g);
    CHECK(w.size == oracle::brute_force_alpha(g));
    CHECK(is_independent_set(g, w.vertices));
  }
}

TEST_CASE("folded 7-cube independence numbers") {
  auto f = catalog_graph("folded7");
  auto w = independence_number(f);
  CHECK(is_independent_set(f, w.vertices));
  // Hoffman ratio with spectrum 7, 3, -1, -5: 64 * 5 / 12.
  CHECK(w.size <= 26);
  // Triangle-free (an antipodal edge and two unit edges cannot close up).
  CHECK(independence_number(catalog_graph("co-folded7")).size == 2);
}

TEST_CASE("random graphs match subset enumeration") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = oracle::random_graph(rng, 1, 12);
    auto w = independence_number(g);
    REQUIRE(w.size == oracle::brute_force_alpha(g));
    CHECK(static_cast<int>(w.vertices.size()) == w.size);
    CHECK(is_independent_set(g, w.vertices));
  }
}

TEST_CASE("witnesses are deterministic") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = oracle::random_graph(rng, 10, 30);
    CHECK(independence_number(g).vertices == independence_number(g).vertices);
  }
}

TEST_CASE("is_independent_set") {
  auto c5 = make_cycle(5);
  CHECK(is_independent_set(c5, {0, 2}));
  CHECK_FALSE(is_independent_set(c5, {0, 1}));
  CHECK_FALSE(is_independent_set(c5, {0, 0}));
  CHECK_FALSE(is_independent_set(c5, {0, 7}));
  CHECK(is_independent_set(c5, {}));
}

TEST_CASE("bipartite matching examples") {
  auto c6 = make_cycle(6);
  auto m6 = maximum_matching_bipartite(c6, is_bipartite(c6).side);
  CHECK(m6.size() == 3);
  CHECK(oracle::brute_force_matching(c6) == 3);
  auto p4 = make_path(4);
  auto m4 = maximum_matching_bipartite(p4, is_bipartite(p4).side);
  CHECK(m4.size() == 2);
  CHECK(oracle::brute_force_matching(p4) == 2);
  CHECK(independence_number(p4).size == 4 - 2);
  auto e5 = make_empty(5);
  CHECK(maximum_matching_bipartite(e5, is_bipartite(e5).side).empty());
  CHECK_THROWS_AS(maximum_matching_bipartite(c6, std::vector<int>(6, 0)), InvalidInput);
  CHECK_THROWS_AS(maximum_matching_bipartite(c6, std::vector<int>(5, 0)), InvalidInput);
}

TEST_CASE("matchings are matchings and satisfy Konig") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = oracle::random_bipartite(rng, 1, 14);
    auto side = is_bipartite(g).side;
    auto m = maximum_matching_bipartite(g, side);
    std::vector<int> used(g.order(), 0);
    for (auto [u, v] : m) {
      CHECK(g.adjacent(u, v));
      CHECK(used[u]++ == 0);
      CHECK(used[v]++ == 0);
    }
    CHECK(oracle::brute_force_alpha(g) == g.order() - static_cast<int>(m.size()));
    if (g.size() <= 20)
      CHECK(oracle::brute_force_matching(g) == static_cast<int>(m.size()));
  }
}
