#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "coarse/coloring.hpp"
#include "coarse/filtration.hpp"
#include "coarse/random_gen.hpp"
#include "coarse/rep_check.hpp"
#include "coarse/smoothing.hpp"
#include "coarse/spectral.hpp"

namespace coarse {

/// One verified property, aggregated over the trials of a suite.
/// `residual` is the worst measured violation margin (<= tolerance
/// when passing) and `slack` its negation, the distance left to the
/// bound.
struct CheckReport {
  std::string check;
  double residual = 0.0;
  double slack = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
};

namespace detail {

inline CheckReport make_report(const std::string& name, double worst_margin, double tol,
                               std::uint64_t seed, bool extra_ok = true) {
  CheckReport r;
  r.check = name;
  r.residual = worst_margin;
  r.slack = -worst_margin;
  r.pass = extra_ok && worst_margin <= tol;
  r.seed = seed;
  return r;
}

}  // namespace detail

/// Random graphs (n <= 60, max degree <= 6), random finitely
/// supported eta, eps in {0.5, 0.2, 0.1}: the three smoothing
/// conditions hold with the caller's eps (tolerance 1e-10) and the
/// output stays normalized (1e-12).
inline std::vector<CheckReport> run_smoothing_suite(std::uint64_t seed, int trials = 200) {
  Rng rng(seed);
  const double eps_grid[] = {0.5, 0.2, 0.1};
  double worst_l1 = -1.0, worst_ratio = -1.0, worst_tail = -1.0, worst_mass = 0.0;
  for (int t = 0; t < trials; ++t) {
    const int n = rand_int(rng, 1, 60);
    const UlfGraph g = random_graph_bounded_degree(rng, n, rand_int(rng, 1, 6));
    const ProbMeasure eta = random_measure(rng, n, 8);
    for (double eps : eps_grid) {
      const SmoothResult res = smooth(eta, eps, g);
      worst_l1 = std::max(worst_l1, res.report.l1_dist - eps);
      worst_ratio = std::max(worst_ratio, res.report.worst_edge_ratio - res.report.L);
      worst_tail = std::max(worst_tail, res.report.worst_tail_margin);
      worst_mass = std::max(worst_mass, std::abs(res.eta_prime.total_mass() - 1.0));
    }
  }
  return {detail::make_report("smoothing-l1", worst_l1, 1e-10, seed),
          detail::make_report("smoothing-edge-ratio", worst_ratio, 1e-10, seed),
          detail::make_report("smoothing-tail", worst_tail, 1e-10, seed),
          detail::make_report("smoothing-normalization", worst_mass, 1e-12, seed)};
}

/// Random symmetric relations with diagonal, max row degree d <= 6:
/// at most 2d-1 involutions, exact cover, every part an involution
/// with graph inside the input.
inline std::vector<CheckReport> run_coloring_suite(std::uint64_t seed, int trials = 200) {
  Rng rng(seed);
  double worst_count = -1.0;
  bool cover_ok = true, inv_ok = true;
  for (int t = 0; t < trials; ++t) {
    const int n = rand_int(rng, 1, 40);
    const Entourage s = random_symmetric_relation(rng, n, rand_int(rng, 1, 6));
    const int d = check_ulf(s).row;
    const std::vector<PartialTranslation> invs = edge_color_decompose(s);
    worst_count = std::max(worst_count, static_cast<double>(static_cast<int>(invs.size()) - (2 * d - 1)));
    Entourage cover(n, {});
    for (const auto& inv : invs) {
      if (!is_involution(inv)) inv_ok = false;
      const Entourage g = inv.graph();
      if (!g.subset_of(s)) cover_ok = false;
      cover = cover.union_with(g);
    }
    if (!(cover == s)) cover_ok = false;
  }
  return {detail::make_report("coloring-count", worst_count, 0.0, seed),
          detail::make_report("coloring-cover", cover_ok ? 0.0 : 1.0, 0.0, seed),
          detail::make_report("coloring-involutions", inv_ok ? 0.0 : 1.0, 0.0, seed)};
}

/// Random partial injections (n <= 50): the doubled map is an
/// involution of X ⊔ X with the prescribed swap/fix behavior.
inline std::vector<CheckReport> run_two_by_two_suite(std::uint64_t seed, int trials = 100) {
  Rng rng(seed);
  bool inv_ok = true, restrict_ok = true;
  for (int t = 0; t < trials; ++t) {
    const int n = rand_int(rng, 1, 50);
    const PartialTranslation gamma = random_partial_injection(rng, n);
    const PartialTranslation u = two_by_two(gamma);
    if (!is_involution(u) || u.ground_size() != 2 * n) {
      inv_ok = false;
      continue;
    }
    const PartialTranslation ginv = gamma.inverse();
    for (int x = 0; x < n; ++x) {
      const int expect = gamma.defined_at(x) ? n + *gamma.apply(x) : x;
      if (*u.apply(x) != expect) restrict_ok = false;
    }
    for (int y = 0; y < n; ++y) {
      const int expect = ginv.defined_at(y) ? *ginv.apply(y) : n + y;
      if (*u.apply(n + y) != expect) restrict_ok = false;
    }
  }
  return {detail::make_report("two-by-two-involution", inv_ok ? 0.0 : 1.0, 0.0, seed),
          detail::make_report("two-by-two-restriction", restrict_ok ? 0.0 : 1.0, 0.0, seed)};
}

/// Random instances (n <= 8, k <= 3) of the norm-reduction lemma,
/// the compression-state identity, and the exact ghost-vanishing
/// cancellation.
inline std::vector<CheckReport> run_rep_check_suite(std::uint64_t seed, int trials = 200) {
  Rng rng(seed);
  double worst_slack = 0.0, worst_norm = 0.0, worst_state = 0.0, worst_comp = 0.0;
  bool ghost_ok = true;
  for (int t = 0; t < trials; ++t) {
    const int n = rand_int(rng, 2, 8);
    const int k = rand_int(rng, 1, 3);
    const VecValuedMatrix zeta = random_unit_vvm(rng, n, k);
    RealVector h(n), f(n);
    for (int i = 0; i < n; ++i) {
      h(i) = std::exp(rand_double(rng, -1.0, 1.0));
      f(i) = rand_double(rng, -1.0, 1.0);
    }
    const PartialTranslation gamma = random_permutation(rng, n);
    const LemmaReport rep = lemma_inequalities(zeta, h, gamma, f);
    worst_slack = std::max(worst_slack, -rep.slack_i);
    worst_norm = std::max(worst_norm, rep.norm_residual);
    worst_state = std::max(worst_state, rep.state_residual);

    // Compression-state identity on a random connected graph.
    const UlfGraph g = random_connected_graph(rng, n, rand_int(rng, 0, n));
    const int radius = rand_int(rng, 0, 2);
    Matrix em = random_complex_matrix(rng, n, n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (g.metric()(x, y) > ExtDist(radius)) em(x, y) = Complex(0.0, 0.0);
    if (em.norm() > 0.0) {
      em /= em.norm();
      Matrix am = random_complex_matrix(rng, n, n);
      am /= am.norm();
      const CompressionReport crep =
          compression_state_identity(HSMatrix(em), PropOperator(am), radius, g.metric());
      worst_comp = std::max(worst_comp, crep.residual);
    }

    // Ghost vanishing: operator living on one clique, state on the other.
    {
      const int n1 = rand_int(rng, 1, 4), n2 = rand_int(rng, 1, 4);
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < n1; ++i)
        for (int j = i + 1; j < n1; ++j) edges.push_back({i, j});
      for (int i = 0; i < n2; ++i)
        for (int j = i + 1; j < n2; ++j) edges.push_back({n1 + i, n1 + j});
      const UlfGraph two_cliques(n1 + n2, std::move(edges));
      Matrix am = Matrix::Zero(n1 + n2, n1 + n2);
      am.topLeftCorner(n1, n1) = random_complex_matrix(rng, n1, n1);
      Matrix em2 = Matrix::Zero(n1 + n2, n1 + n2);
      em2.bottomRightCorner(n2, n2) = random_complex_matrix(rng, n2, n2);
      const CompressionReport crep = compression_state_identity(
          HSMatrix(std::move(em2)), PropOperator(std::move(am)), 1, two_cliques.metric());
      if (crep.lhs != Complex(0.0, 0.0) || crep.rhs != Complex(0.0, 0.0)) ghost_ok = false;
    }
  }
  return {detail::make_report("lemma-i-slack", worst_slack, 1e-10, seed),
          detail::make_report("lemma-ii-norm", worst_norm, 1e-10, seed),
          detail::make_report("lemma-iii-state", worst_state, 1e-10, seed),
          detail::make_report("compression-identity", worst_comp, 1e-12, seed),
          detail::make_report("ghost-vanishing", ghost_ok ? 0.0 : 1.0, 0.0, seed)};
}

/// Entrywise-positive xi and a permutation gamma: the correction
/// h = h_gamma(xi, gamma) intertwines exactly,
/// h · gamma · diag(xi) · gamma^{-1} = diag(xi).
inline std::vector<CheckReport> run_fixed_point_suite(std::uint64_t seed, int trials = 50) {
  Rng rng(seed);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const int n = rand_int(rng, 1, 30);
    RealVector xi(n);
    for (int i = 0; i < n; ++i) xi(i) = rand_double(rng, 0.1, 2.0);
    const PartialTranslation gamma = random_permutation(rng, n);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    const HGamma hg = h_gamma(xi, {all}, gamma);
    const Matrix lhs = detail::weighted_conjugation(hg.h, gamma, diag_embed(xi.cast<Complex>()).mat);
    const Matrix rhs = diag_embed(xi.cast<Complex>()).mat;
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    worst = std::max(worst, hg.sup_error);
  }
  return {detail::make_report("h-gamma-fixed-point", worst, 1e-12, seed)};
}

/// Random connected graphs: the generated filtration truncated at the
/// diameter reproduces the graph metric exactly.
inline std::vector<CheckReport> run_metric_reconstruction_suite(std::uint64_t seed, int trials = 50) {
  Rng rng(seed);
  bool ok = true;
  for (int t = 0; t < trials; ++t) {
    const int n = rand_int(rng, 2, 25);
    const UlfGraph g = random_connected_graph(rng, n, rand_int(rng, 0, n));
    const int depth = static_cast<int>(g.diameter().value());
    const Entourage gen = adjacency_relation(g).union_with(Entourage::diagonal(n));
    const ExtendedMetric rec = metric_from_filtration(filtration_from_generators(n, {gen}, depth));
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (rec(x, y) != g.metric()(x, y)) ok = false;
  }
  return {detail::make_report("metric-reconstruction", ok ? 0.0 : 1.0, 0.0, seed)};
}

}  // namespace coarse
