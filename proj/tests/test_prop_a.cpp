#include <catch2/catch_amalgamated.hpp>

#include "coarse/box_space.hpp"
#include "coarse/random_gen.hpp"
#include "coarse/smoothing.hpp"
#include "coarse/suites.hpp"
#include "coarse/witness.hpp"

using namespace coarse;

TEST_CASE("ProbMeasure invariants") {
  CHECK_THROWS_AS(ProbMeasure(3, {{0, 0.5}}), std::invalid_argument);
  CHECK_THROWS_AS(ProbMeasure(3, {{0, 0.5}, {1, -0.5}, {2, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(ProbMeasure(2, {{0, 0.5}, {0, 0.5}}), std::invalid_argument);
  const ProbMeasure m = ProbMeasure::normalized(4, {{1, 2.0}, {3, 6.0}});
  CHECK(m.at(1) == 0.25);
  CHECK(m.at(3) == 0.75);
  CHECK(m.at(0) == 0.0);
  CHECK(m.support() == std::vector<int>{1, 3});
  CHECK(l1_distance(ProbMeasure::delta(4, 0), ProbMeasure::delta(4, 2)) == 2.0);
  CHECK(l1_distance(m, m) == 0.0);
}

TEST_CASE("smoothing_constant") {
  CHECK(smoothing_constant(3, 0.5) == 9.0);
  CHECK(smoothing_constant(0, 0.7) == 1.0);
  CHECK(smoothing_constant(1, 0.5) == 3.0);
  CHECK_THROWS_AS(smoothing_constant(3, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(smoothing_constant(3, 1.0), std::invalid_argument);
}

TEST_CASE("smooth worked examples") {
  SECTION("isolated vertex keeps its delta") {
    const UlfGraph g(1, {});
    const SmoothResult r = smooth(ProbMeasure::delta(1, 0), 0.5, g);
    CHECK(r.eta_prime.at(0) == 1.0);
    CHECK(r.report.pass());
    CHECK(r.report.l1_dist == 0.0);
  }
  SECTION("two-vertex path at explicit L = 3") {
    const UlfGraph g(2, {{0, 1}});
    const std::vector<double> raw = smoothing_raw(ProbMeasure::delta(2, 0), 3.0, g);
    CHECK(raw[0] == 1.0);
    CHECK(raw[1] == Catch::Approx(1.0 / 3.0).margin(1e-15));
    const ProbMeasure eta_prime = smooth_with_constant(ProbMeasure::delta(2, 0), 3.0, g);
    CHECK(eta_prime.at(0) == Catch::Approx(0.75).margin(1e-15));
    CHECK(eta_prime.at(1) == Catch::Approx(0.25).margin(1e-15));
    const SmoothingReport rep = verify_smoothing(ProbMeasure::delta(2, 0), eta_prime, 0.75, 3.0, g);
    CHECK(rep.worst_edge_ratio == Catch::Approx(3.0).margin(1e-12));
    CHECK(rep.l1_dist == Catch::Approx(0.5).margin(1e-15));
  }
  SECTION("uniform measure on a cycle is a fixed point") {
    const UlfGraph g = cycle_graph(9);
    std::vector<std::pair<int, double>> w;
    for (int i = 0; i < 9; ++i) w.push_back({i, 1.0});
    const ProbMeasure uniform = ProbMeasure::normalized(9, std::move(w));
    const SmoothResult r = smooth(uniform, 0.2, g);
    CHECK(r.report.l1_dist <= 1e-12);
    CHECK(r.report.pass());
  }
  SECTION("rejects out-of-range eps") {
    const UlfGraph g(2, {{0, 1}});
    CHECK_THROWS_AS(smooth(ProbMeasure::delta(2, 0), 1.5, g), std::invalid_argument);
  }
}

TEST_CASE("verify_smoothing catches violations") {
  SECTION("mass parked at distance three fails the tail bound") {
    const UlfGraph path(4, {{0, 1}, {1, 2}, {2, 3}});
    const SmoothingReport rep =
        verify_smoothing(ProbMeasure::delta(4, 0), ProbMeasure::delta(4, 3), 0.5, 3.0, path);
    CHECK_FALSE(rep.tail_pass);
    CHECK(rep.worst_tail_margin == Catch::Approx(1.0 - 0.125).margin(1e-12));
  }
  SECTION("identical measures on an edgeless graph pass vacuously") {
    const UlfGraph g(3, {});
    const SmoothingReport rep =
        verify_smoothing(ProbMeasure::delta(3, 1), ProbMeasure::delta(3, 1), 0.5, 1.0, g);
    CHECK(rep.pass());
    CHECK(rep.worst_edge_ratio == 1.0);
  }
  SECTION("zero against nonzero across an edge is an infinite ratio") {
    const UlfGraph g(2, {{0, 1}});
    const SmoothingReport rep =
        verify_smoothing(ProbMeasure::delta(2, 0), ProbMeasure::delta(2, 0), 0.5, 100.0, g);
    CHECK_FALSE(rep.ratio_pass);
  }
  SECTION("smooth output re-verifies") {
    Rng rng(401);
    for (int t = 0; t < 20; ++t) {
      const int n = rand_int(rng, 1, 40);
      const UlfGraph g = random_graph_bounded_degree(rng, n, rand_int(rng, 1, 5));
      const ProbMeasure eta = random_measure(rng, n, 6);
      const SmoothResult r = smooth(eta, 0.3, g);
      REQUIRE(r.report.pass());
      REQUIRE(verify_smoothing(eta, r.eta_prime, 0.3, r.L_used, g).pass());
    }
  }
}

TEST_CASE("edge ratio is scale invariant") {
  Rng rng(402);
  for (int t = 0; t < 20; ++t) {
    const int n = rand_int(rng, 2, 30);
    const UlfGraph g = random_graph_bounded_degree(rng, n, 4);
    const ProbMeasure eta = random_measure(rng, n, 5);
    const double L = smoothing_constant(g.max_degree(), 0.25);
    const std::vector<double> raw = smoothing_raw(eta, L, g);
    const ProbMeasure normalized = smooth_with_constant(eta, L, g);
    for (const auto& [u, v] : g.edges()) {
      if (u == v || raw[u] == 0.0 || raw[v] == 0.0) continue;
      const double raw_ratio = raw[u] / raw[v];
      const double norm_ratio = normalized.at(u) / normalized.at(v);
      REQUIRE(raw_ratio == Catch::Approx(norm_ratio).epsilon(1e-12));
    }
  }
}

TEST_CASE("smoothing suite passes at all three eps levels") {
  for (const auto& rep : run_smoothing_suite(41, 60)) CHECK(rep.pass);
}

TEST_CASE("ball_average_witness") {
  SECTION("radius zero gives deltas") {
    const UlfGraph g = cycle_graph(7);
    const Witness w = ball_average_witness(g, 0);
    for (int x = 0; x < 7; ++x) {
      CHECK(w.at(x).at(x) == 1.0);
      CHECK(w.at(x).support() == std::vector<int>{x});
    }
  }
  SECTION("cycle windows have 2S+1 points") {
    const UlfGraph g = cycle_graph(11);
    const Witness w = ball_average_witness(g, 3);
    for (int x = 0; x < 11; ++x) CHECK(w.at(x).support().size() == 7);
    CHECK(w.respects_radius(g.metric()));
  }
  SECTION("complete graph at radius one is uniform everywhere") {
    const UlfGraph g = complete_graph(5);
    const Witness w = ball_average_witness(g, 1);
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y) CHECK(w.at(x).at(y) == Catch::Approx(0.2).margin(1e-15));
  }
}

TEST_CASE("witness_quality") {
  SECTION("deltas across an edge have full discrepancy") {
    const UlfGraph g(2, {{0, 1}});
    CHECK(witness_quality(ball_average_witness(g, 0), 1, g.metric()) == 2.0);
  }
  SECTION("constant witness has quality zero") {
    const UlfGraph g = complete_graph(4);
    CHECK(witness_quality(ball_average_witness(g, 1), 1, g.metric()) == 0.0);
  }
  SECTION("C101 ball average at S = 10: frozen window computation") {
    const UlfGraph g = cycle_graph(101);
    const double eps = witness_quality(ball_average_witness(g, 10), 1, g.metric());
    CHECK(eps == Catch::Approx(2.0 / 21.0).margin(1e-12));
  }
  SECTION("no qualifying pair gives zero") {
    const UlfGraph g(3, {});
    CHECK(witness_quality(ball_average_witness(g, 1), 2, g.metric()) == 0.0);
  }
}

TEST_CASE("cycle box space: witness quality decays as 2/(2S+1)") {
  std::vector<int> sizes{5, 9, 13, 17};
  for (int radius : {1, 2, 3}) {
    for (int n : sizes) {
      if (n <= 2 * radius + 1) continue;
      const UlfGraph g = cycle_graph(n);
      const double eps = witness_quality(ball_average_witness(g, radius), 1, g.metric());
      REQUIRE(eps == Catch::Approx(2.0 / (2 * radius + 1)).margin(1e-12));
    }
  }
}
