#include <catch2/catch_amalgamated.hpp>

#include "coarse/random_gen.hpp"
#include "coarse/rep_check.hpp"
#include "coarse/spectral.hpp"
#include "coarse/suites.hpp"
#include "oracles.hpp"

using namespace coarse;

TEST_CASE("left_right_apply") {
  Rng rng(501);
  SECTION("identities act trivially") {
    const HSMatrix omega(random_complex_matrix(rng, 4, 4));
    const HSMatrix out = left_right_apply(identity_operator(4), identity_operator(4), omega);
    CHECK((out.mat - omega.mat).norm() == 0.0);
  }
  SECTION("left diagonal scales rows") {
    Matrix f = Matrix::Zero(3, 3);
    f(0, 0) = 2.0;
    f(1, 1) = -1.0;
    f(2, 2) = 0.5;
    const HSMatrix omega(Matrix::Ones(3, 3));
    const HSMatrix out = left_right_apply(PropOperator(f), identity_operator(3), omega);
    for (int y = 0; y < 3; ++y) {
      CHECK(out.mat(0, y) == Complex(2.0, 0.0));
      CHECK(out.mat(1, y) == Complex(-1.0, 0.0));
      CHECK(out.mat(2, y) == Complex(0.5, 0.0));
    }
  }
  SECTION("random triples match elementwise triple sums") {
    for (int t = 0; t < 10; ++t) {
      const Matrix a = random_complex_matrix(rng, 4, 4);
      const Matrix b = random_complex_matrix(rng, 4, 4);
      const Matrix w = random_complex_matrix(rng, 4, 4);
      const HSMatrix out = left_right_apply(PropOperator(a), PropOperator(b), HSMatrix(w));
      for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
          Complex s(0.0, 0.0);
          for (int p = 0; p < 4; ++p)
            for (int q = 0; q < 4; ++q) s += a(x, p) * w(p, q) * b(q, y);
          REQUIRE(std::abs(out.mat(x, y) - s) <= 1e-10);
        }
    }
  }
}

TEST_CASE("diag_embed") {
  SECTION("basis vector gives a matrix unit") {
    Vector e = Vector::Zero(3);
    e(1) = 1.0;
    const HSMatrix d = diag_embed(e);
    CHECK(d.mat(1, 1) == Complex(1.0, 0.0));
    CHECK(d.mat.sum() == Complex(1.0, 0.0));
    CHECK(d.prop_bound == ExtDist(0));
  }
  SECTION("uniform unit vector keeps norm one") {
    const HSMatrix d = diag_embed(Vector::Constant(4, Complex(0.5, 0.0)));
    CHECK(hs_norm(d) == Catch::Approx(1.0).margin(1e-15));
  }
  SECTION("HS norm equals the vector norm") {
    Rng rng(502);
    for (int t = 0; t < 10; ++t) {
      Vector v(6);
      for (int i = 0; i < 6; ++i) v(i) = Complex(rand_double(rng, -1, 1), rand_double(rng, -1, 1));
      CHECK(hs_norm(diag_embed(v)) == Catch::Approx(v.norm()).margin(1e-12));
    }
  }
}

TEST_CASE("norm_reduction") {
  Rng rng(503);
  SECTION("scalar coefficient space reduces to absolute values") {
    const Matrix m = random_complex_matrix(rng, 5, 5);
    const HSMatrix eta = norm_reduction(VecValuedMatrix({m}));
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y) REQUIRE(eta.mat(x, y) == Complex(std::abs(m(x, y)), 0.0));
  }
  SECTION("orthonormal cell vectors reduce to unit entries") {
    VecValuedMatrix zeta(3, 3);
    zeta.slice(0)(0, 0) = 1.0;
    zeta.slice(1)(1, 2) = 1.0;
    zeta.slice(2)(2, 1) = 1.0;
    const HSMatrix eta = norm_reduction(zeta);
    CHECK(eta.mat(0, 0) == Complex(1.0, 0.0));
    CHECK(eta.mat(1, 2) == Complex(1.0, 0.0));
    CHECK(eta.mat(2, 1) == Complex(1.0, 0.0));
    CHECK(std::abs(eta.mat.sum() - Complex(3.0, 0.0)) == 0.0);
  }
  SECTION("norm preserved, entries nonnegative") {
    for (int t = 0; t < 20; ++t) {
      const VecValuedMatrix zeta = random_unit_vvm(rng, rand_int(rng, 1, 8), rand_int(rng, 1, 4));
      const HSMatrix eta = norm_reduction(zeta);
      REQUIRE(hs_norm(eta) == Catch::Approx(zeta.norm()).margin(1e-12));
      for (int x = 0; x < zeta.dim(); ++x)
        for (int y = 0; y < zeta.dim(); ++y) {
          REQUIRE(eta.mat(x, y).imag() == 0.0);
          REQUIRE(eta.mat(x, y).real() >= 0.0);
        }
    }
  }
}

TEST_CASE("lemma_inequalities") {
  Rng rng(504);
  SECTION("a common unit coefficient vector forces equality in (i)") {
    for (int t = 0; t < 10; ++t) {
      const int n = rand_int(rng, 2, 6), k = rand_int(rng, 1, 3);
      // zeta(x,y) = c(x,y) * kappa for one fixed unit kappa and c >= 0
      Vector kappa(k);
      for (int j = 0; j < k; ++j)
        kappa(j) = Complex(rand_double(rng, -1, 1), rand_double(rng, -1, 1));
      kappa /= kappa.norm();
      VecValuedMatrix zeta(n, k);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          const double c = rand_double(rng, 0.0, 1.0);
          for (int j = 0; j < k; ++j) zeta.slice(j)(x, y) = c * kappa(j);
        }
      zeta.scale(1.0 / zeta.norm());
      RealVector h(n), f(n);
      for (int i = 0; i < n; ++i) {
        h(i) = std::exp(rand_double(rng, -1, 1));
        f(i) = rand_double(rng, -1, 1);
      }
      const LemmaReport rep = lemma_inequalities(zeta, h, random_permutation(rng, n), f);
      REQUIRE(std::abs(rep.slack_i) <= 1e-10);
    }
  }
  SECTION("f = 1 reduces (iii) to norm preservation") {
    const int n = 4, k = 2;
    const VecValuedMatrix zeta = random_unit_vvm(rng, n, k);
    const LemmaReport rep =
        lemma_inequalities(zeta, RealVector::Ones(n), PartialTranslation::identity(n),
                           RealVector::Ones(n));
    CHECK(rep.state_residual <= 1e-12);
    CHECK(rep.norm_residual <= 1e-12);
    CHECK(rep.lhs_i == Catch::Approx(1.0).margin(1e-10));  // <eta, eta> for unit zeta
  }
  SECTION("nonpositive h is rejected") {
    const VecValuedMatrix zeta = random_unit_vvm(rng, 3, 1);
    RealVector h = RealVector::Ones(3);
    h(1) = 0.0;
    CHECK_THROWS_AS(lemma_inequalities(zeta, h, PartialTranslation::identity(3), RealVector::Ones(3)),
                    std::invalid_argument);
  }
  SECTION("random instances keep the inequality and identities") {
    for (const auto& rep : run_rep_check_suite(51, 60)) CHECK(rep.pass);
  }
}

TEST_CASE("compression_state_identity") {
  Rng rng(505);
  SECTION("diagonal state at radius zero") {
    const UlfGraph g = cycle_graph(6);
    Vector xi(6);
    for (int i = 0; i < 6; ++i) xi(i) = Complex(rand_double(rng, -1, 1), rand_double(rng, -1, 1));
    xi /= xi.norm();
    const Matrix a = random_complex_matrix(rng, 6, 6);
    const CompressionReport rep =
        compression_state_identity(diag_embed(xi), PropOperator(a), 0, g.metric());
    Complex expected(0.0, 0.0);
    for (int x = 0; x < 6; ++x) expected += std::norm(xi(x)) * a(x, x);
    CHECK(std::abs(rep.lhs - expected) <= 1e-12);
    CHECK(rep.residual <= 1e-12);
  }
  SECTION("random low-propagation states on C8 against the adjacency") {
    const UlfGraph g = cycle_graph(8);
    for (int t = 0; t < 20; ++t) {
      Matrix em = random_complex_matrix(rng, 8, 8);
      for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y)
          if (g.metric()(x, y) > ExtDist(2)) em(x, y) = 0.0;
      em /= em.norm();
      const CompressionReport rep =
          compression_state_identity(HSMatrix(em), adjacency_operator(g), 2, g.metric());
      REQUIRE(rep.residual <= 1e-12);
    }
  }
  SECTION("propagation violation is rejected") {
    const UlfGraph g = cycle_graph(8);
    Matrix em = Matrix::Zero(8, 8);
    em(0, 4) = 1.0;  // distance 4
    CHECK_THROWS_WITH(compression_state_identity(HSMatrix(em), adjacency_operator(g), 2, g.metric()),
                      Catch::Matchers::ContainsSubstring("propagation"));
  }
  SECTION("operator outside the reach of the state gives exact zero") {
    // two 4-cliques; operator on the first, state columns on the second
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        edges.push_back({i, j});
        edges.push_back({4 + i, 4 + j});
      }
    const UlfGraph g(8, std::move(edges));
    Matrix am = Matrix::Zero(8, 8);
    am.topLeftCorner(4, 4) = random_complex_matrix(rng, 4, 4);
    Matrix em = Matrix::Zero(8, 8);
    em.bottomRightCorner(4, 4) = random_complex_matrix(rng, 4, 4);
    const CompressionReport rep =
        compression_state_identity(HSMatrix(em), PropOperator(am), 1, g.metric());
    CHECK(rep.lhs == Complex(0.0, 0.0));
    CHECK(rep.rhs == Complex(0.0, 0.0));
  }
}

TEST_CASE("h_gamma feeds the exact fixed point of the conjugation") {
  for (const auto& rep : run_fixed_point_suite(52, 30)) CHECK(rep.pass);
}
