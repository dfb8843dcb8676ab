#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "coarse/graph.hpp"
#include "coarse/measure.hpp"

namespace coarse {

/// L = max{1, M(1 + 1/eps)} for max degree M; the geometric decay
/// rate that keeps the smoothed mass sum below 1 + eps.
inline double smoothing_constant(int max_degree, double eps) {
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("smoothing_constant: eps must lie in (0,1)");
  if (max_degree < 0) throw std::invalid_argument("smoothing_constant: negative degree");
  return std::max(1.0, max_degree * (1.0 + 1.0 / eps));
}

/// Measured state of the three smoothing conditions for a pair
/// (eta, eta') at quality eps and decay constant L:
///   (1) ||eta - eta'||_1 <= eps,
///   (2) L^{-1} eta'(x) <= eta'(y) <= L eta'(x) on every edge (x,y),
///   (3) ||P_V eta'||_1 <= eps^{dist(V, supp eta)} for every V.
/// Condition (3) only depends on V through dist(V, supp eta), so the
/// distance shells {x : dist(x, supp eta) >= r} are the extremal sets
/// and are the ones measured.
struct SmoothingReport {
  double eps = 0.0;
  double L = 1.0;
  double l1_dist = 0.0;
  double worst_edge_ratio = 1.0;   // max over edges of eta'(y)/eta'(x)
  double worst_tail_margin = 0.0;  // max over shells r of mass(r) - eps^r
  bool l1_pass = false;
  bool ratio_pass = false;
  bool tail_pass = false;

  bool pass() const { return l1_pass && ratio_pass && tail_pass; }
};

namespace detail {

inline std::vector<ExtDist> dist_to_support(const ProbMeasure& eta, const UlfGraph& g) {
  const ExtendedMetric& d = g.metric();
  std::vector<ExtDist> out(g.size(), ExtDist::infinity());
  for (int x = 0; x < g.size(); ++x)
    for (const auto& [w, mass] : eta.entries()) out[x] = std::min(out[x], d(x, w));
  return out;
}

}  // namespace detail

/// Raw smoothing sums eta'(x) = sum_w L^{-d(x,w)} eta(w), with
/// L^{-inf} = 0 so disconnected components exchange no mass.
inline std::vector<double> smoothing_raw(const ProbMeasure& eta, double L, const UlfGraph& g) {
  if (eta.ground_size() != g.size()) throw std::invalid_argument("smoothing_raw: size mismatch");
  if (L < 1.0) throw std::invalid_argument("smoothing_raw: L must be >= 1");
  const ExtendedMetric& d = g.metric();
  std::vector<double> raw(g.size(), 0.0);
  for (int x = 0; x < g.size(); ++x) {
    double s = 0.0;
    for (const auto& [w, mass] : eta.entries()) {
      const ExtDist dist = d(x, w);
      if (dist.is_inf()) continue;
      s += std::pow(L, -static_cast<double>(dist.value())) * mass;
    }
    raw[x] = s;
  }
  return raw;
}

/// Normalized smoothing at an explicit decay constant.
inline ProbMeasure smooth_with_constant(const ProbMeasure& eta, double L, const UlfGraph& g) {
  std::vector<double> raw = smoothing_raw(eta, L, g);
  std::vector<std::pair<int, double>> w;
  for (int x = 0; x < g.size(); ++x)
    if (raw[x] > 0.0) w.push_back({x, raw[x]});
  return ProbMeasure::normalized(g.size(), std::move(w));
}

/// Measure all three conditions exactly; tolerance 1e-10 on each.
inline SmoothingReport verify_smoothing(const ProbMeasure& eta, const ProbMeasure& eta_prime,
                                        double eps, double L, const UlfGraph& g) {
  constexpr double kTol = 1e-10;
  SmoothingReport rep;
  rep.eps = eps;
  rep.L = L;

  rep.l1_dist = l1_distance(eta, eta_prime);
  rep.l1_pass = rep.l1_dist <= eps + kTol;

  rep.worst_edge_ratio = 1.0;
  bool ratio_ok = true;
  for (const auto& [u, v] : g.edges()) {
    if (u == v) continue;
    const double a = eta_prime.at(u);
    const double b = eta_prime.at(v);
    if (a == 0.0 && b == 0.0) continue;
    if (a == 0.0 || b == 0.0) {
      ratio_ok = false;
      rep.worst_edge_ratio = std::numeric_limits<double>::infinity();
      continue;
    }
    rep.worst_edge_ratio = std::max({rep.worst_edge_ratio, a / b, b / a});
  }
  rep.ratio_pass = ratio_ok && rep.worst_edge_ratio <= L * (1.0 + kTol);

  // Tail mass per distance shell, farthest shells first.
  const std::vector<ExtDist> dist = detail::dist_to_support(eta, g);
  std::int64_t max_finite = 0;
  double inf_mass = 0.0;
  for (int x = 0; x < g.size(); ++x) {
    if (dist[x].is_inf())
      inf_mass += eta_prime.at(x);
    else
      max_finite = std::max(max_finite, dist[x].value());
  }
  rep.worst_tail_margin = inf_mass;  // shell at infinity allows no mass at all
  std::vector<double> shell_mass(max_finite + 1, 0.0);
  for (int x = 0; x < g.size(); ++x)
    if (dist[x].is_finite()) shell_mass[dist[x].value()] += eta_prime.at(x);
  double tail = inf_mass;
  for (std::int64_t r = max_finite; r >= 0; --r) {
    tail += shell_mass[r];
    rep.worst_tail_margin =
        std::max(rep.worst_tail_margin, tail - std::pow(eps, static_cast<double>(r)));
  }
  rep.tail_pass = rep.worst_tail_margin <= kTol;
  return rep;
}

struct SmoothResult {
  ProbMeasure eta_prime;
  double L_used = 1.0;
  SmoothingReport report;
};

/// Smooth a finitely supported probability measure so that all three
/// conditions hold with the caller's eps. Internally the construction
/// runs at eps_int = eps/3: the raw sums satisfy the edge-ratio bound
/// with L = max{1, M(1 + 1/eps_int)} exactly, the total mass lands in
/// [1, 1 + eps_int], and normalizing costs at most eps_int in l1 and
/// a factor (1 + eps_int) in the tails, which the eps/3 slack absorbs.
inline SmoothResult smooth(const ProbMeasure& eta, double eps, const UlfGraph& g) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("smooth: eps must lie in (0,1)");
  const double eps_int = eps / 3.0;
  const double L = smoothing_constant(g.max_degree(), eps_int);
  SmoothResult out;
  out.eta_prime = smooth_with_constant(eta, L, g);
  out.L_used = L;
  out.report = verify_smoothing(eta, out.eta_prime, eps, L, g);
  return out;
}

}  // namespace coarse
