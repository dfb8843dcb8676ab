#include <catch2/catch_amalgamated.hpp>

#include "coarse/entourage.hpp"
#include "coarse/filtration.hpp"
#include "coarse/graph.hpp"
#include "coarse/random_gen.hpp"
#include "coarse/suites.hpp"
#include "oracles.hpp"

using namespace coarse;

TEST_CASE("ExtDist arithmetic and ordering") {
  const ExtDist inf = ExtDist::infinity();
  CHECK(ExtDist(2) + ExtDist(3) == ExtDist(5));
  CHECK((ExtDist(2) + inf).is_inf());
  CHECK((inf + inf).is_inf());
  CHECK(ExtDist(1000000) < inf);
  CHECK(inf == inf);
  CHECK(ExtDist(0).str() == "0");
  CHECK(inf.str() == "inf");
  CHECK_THROWS_AS(ExtDist(-1), std::invalid_argument);
  CHECK_THROWS_AS(inf.value(), std::logic_error);
}

TEST_CASE("graph_metric on basic shapes") {
  SECTION("two-edge path") {
    UlfGraph g(3, {{0, 1}, {1, 2}});
    CHECK(g.metric()(0, 2) == ExtDist(2));
    CHECK(g.metric()(2, 0) == ExtDist(2));
  }
  SECTION("isolated vertices are infinitely far apart") {
    UlfGraph g(2, {});
    CHECK(g.metric()(0, 1).is_inf());
    CHECK(g.metric()(0, 0) == ExtDist(0));
  }
  SECTION("C5, frozen from the Floyd-Warshall oracle") {
    UlfGraph g = cycle_graph(5);
    const ExtendedMetric fw = oracle::floyd_warshall(g);
    CHECK(fw(0, 3) == ExtDist(2));
    CHECK(g.metric()(0, 3) == ExtDist(2));
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y) CHECK(g.metric()(x, y) == fw(x, y));
  }
  SECTION("empty graph") {
    UlfGraph g(0, {});
    CHECK(g.metric().size() == 0);
  }
}

TEST_CASE("graph metric agrees with Floyd-Warshall on random graphs") {
  Rng rng(101);
  for (int t = 0; t < 25; ++t) {
    const UlfGraph g = random_graph_bounded_degree(rng, rand_int(rng, 1, 30), rand_int(rng, 1, 5));
    const ExtendedMetric fw = oracle::floyd_warshall(g);
    for (int x = 0; x < g.size(); ++x)
      for (int y = 0; y < g.size(); ++y) REQUIRE(g.metric()(x, y) == fw(x, y));
  }
}

TEST_CASE("distance one exactly on edges") {
  Rng rng(102);
  for (int t = 0; t < 20; ++t) {
    const UlfGraph g = random_graph_bounded_degree(rng, rand_int(rng, 2, 25), 4);
    for (int x = 0; x < g.size(); ++x)
      for (int y = 0; y < g.size(); ++y) {
        const bool close = g.metric()(x, y) <= ExtDist(1);
        CHECK(close == (x == y || g.has_edge(x, y)));
      }
  }
}

TEST_CASE("compose_entourages") {
  SECTION("diagonal is a left identity") {
    Entourage e(4, {{0, 1}, {2, 3}, {3, 3}});
    CHECK(compose_entourages(Entourage::diagonal(4), e) == e);
    CHECK(compose_entourages(e, Entourage::diagonal(4)) == e);
  }
  SECTION("single chain") {
    Entourage e(3, {{0, 1}});
    Entourage f(3, {{1, 2}});
    CHECK(compose_entourages(e, f) == Entourage(3, {{0, 2}}));
  }
  SECTION("C4 adjacency with diagonal squares to distance <= 2, via brute force") {
    const UlfGraph c4 = cycle_graph(4);
    const Entourage e = adjacency_relation(c4).union_with(Entourage::diagonal(4));
    const Entourage sq = compose_entourages(e, e);
    CHECK(sq == oracle::brute_compose(e, e));
    // diameter of C4 is 2, so the square is everything
    CHECK(sq.size() == 16);
  }
  SECTION("ground set mismatch") {
    CHECK_THROWS_AS(compose_entourages(Entourage(2, {}), Entourage(3, {})), std::invalid_argument);
  }
}

TEST_CASE("compose is associative on random triples") {
  Rng rng(103);
  for (int t = 0; t < 30; ++t) {
    const int n = rand_int(rng, 1, 12);
    auto rand_ent = [&] {
      std::vector<std::pair<int, int>> p;
      const int m = rand_int(rng, 0, n * 2);
      for (int i = 0; i < m; ++i) p.push_back({rand_int(rng, 0, n - 1), rand_int(rng, 0, n - 1)});
      return Entourage(n, std::move(p));
    };
    const Entourage e = rand_ent(), f = rand_ent(), g = rand_ent();
    REQUIRE(compose_entourages(compose_entourages(e, f), g) ==
            compose_entourages(e, compose_entourages(f, g)));
  }
}

TEST_CASE("inverse_entourage") {
  SECTION("symmetric fixed point") {
    Entourage e(3, {{0, 1}, {1, 0}, {2, 2}});
    CHECK(inverse_entourage(e) == e);
  }
  SECTION("single pair swaps") {
    CHECK(inverse_entourage(Entourage(2, {{0, 1}})) == Entourage(2, {{1, 0}}));
  }
  SECTION("graph of a partial translation inverts to the graph of the inverse") {
    Rng rng(104);
    for (int t = 0; t < 20; ++t) {
      const PartialTranslation p = random_partial_injection(rng, rand_int(rng, 1, 15));
      CHECK(inverse_entourage(p.graph()) == p.inverse().graph());
    }
  }
}

TEST_CASE("check_ulf degrees") {
  CHECK(check_ulf(Entourage::diagonal(7)).row == 1);
  CHECK(check_ulf(Entourage::diagonal(7)).col == 1);
  const Entourage c5 = adjacency_relation(cycle_graph(5)).union_with(Entourage::diagonal(5));
  CHECK(check_ulf(c5).row == 3);  // two neighbors plus the diagonal
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) all.push_back({i, j});
  CHECK(check_ulf(Entourage(4, std::move(all))).row == 4);
}

TEST_CASE("filtration_from_generators") {
  SECTION("empty generators give the diagonal at every level") {
    const Filtration f = filtration_from_generators(5, {}, 3);
    for (int k = 0; k <= 3; ++k) CHECK(f.level(k) == Entourage::diagonal(5));
  }
  SECTION("C5 adjacency at depth 2 matches distance <= 2") {
    const UlfGraph c5 = cycle_graph(5);
    const Filtration f = filtration_from_generators({adjacency_relation(c5)}, 2);
    std::vector<std::pair<int, int>> close;
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y)
        if (c5.metric()(x, y) <= ExtDist(2)) close.push_back({x, y});
    CHECK(f.level(2) == Entourage(5, std::move(close)));
  }
  SECTION("a single transposition stabilizes") {
    // total transposition (0 1) on three points
    const PartialTranslation tau(3, {1, 0, 2});
    const Filtration f = filtration_from_generators({tau.graph()}, 4);
    const Entourage expected =
        Entourage(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}});
    for (int k = 1; k <= 4; ++k) CHECK(f.level(k) == expected);
  }
}

TEST_CASE("filtration composition law holds for generated filtrations") {
  Rng rng(105);
  for (int t = 0; t < 15; ++t) {
    const int n = rand_int(rng, 1, 10);
    std::vector<Entourage> gens;
    const int g = rand_int(rng, 0, 2);
    for (int i = 0; i < g; ++i) gens.push_back(random_partial_injection(rng, n).graph());
    const int depth = rand_int(rng, 0, 4);
    const Filtration f = filtration_from_generators(n, gens, depth);
    for (int a = 0; a <= depth; ++a)
      for (int b = 0; a + b <= depth; ++b)
        REQUIRE(compose_entourages(f.level(a), f.level(b)).subset_of(f.level(a + b)));
  }
}

TEST_CASE("metric_from_filtration") {
  SECTION("recovers the graph metric up to the truncation depth") {
    Rng rng(106);
    for (int t = 0; t < 10; ++t) {
      const UlfGraph g = random_connected_graph(rng, rand_int(rng, 2, 15), rand_int(rng, 0, 10));
      const int depth = static_cast<int>(g.diameter().value());
      const Filtration f = filtration_from_generators({adjacency_relation(g)}, depth);
      const ExtendedMetric m = metric_from_filtration(f);
      for (int x = 0; x < g.size(); ++x)
        for (int y = 0; y < g.size(); ++y) REQUIRE(m(x, y) == g.metric()(x, y));
    }
  }
  SECTION("diagonal is at level zero") {
    const Filtration f = filtration_from_generators(4, {}, 2);
    const ExtendedMetric m = metric_from_filtration(f);
    for (int x = 0; x < 4; ++x) CHECK(m(x, x) == ExtDist(0));
  }
  SECTION("absent pairs read as infinity") {
    const Filtration f = filtration_from_generators(3, {}, 2);
    CHECK(metric_from_filtration(f)(0, 2).is_inf());
  }
}

TEST_CASE("generated metrics satisfy the triangle inequality within depth") {
  Rng rng(107);
  for (int t = 0; t < 15; ++t) {
    const int n = rand_int(rng, 2, 30);
    std::vector<Entourage> gens;
    const int g = rand_int(rng, 1, 3);
    for (int i = 0; i < g; ++i) gens.push_back(random_partial_injection(rng, n).graph());
    const int depth = rand_int(rng, 1, 6);
    const ExtendedMetric m = metric_from_filtration(filtration_from_generators(n, gens, depth));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          if (m(x, y).is_inf() || m(y, z).is_inf()) continue;
          // beyond the truncation depth nothing can be concluded
          if (m(x, y).value() + m(y, z).value() > depth) continue;
          REQUIRE(m(x, z) <= m(x, y) + m(y, z));
        }
  }
}

TEST_CASE("metric reconstruction suite") {
  for (const auto& rep : run_metric_reconstruction_suite(11, 10)) CHECK(rep.pass);
}
