#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coarse/entourage.hpp"
#include "coarse/graph.hpp"
#include "coarse/measure.hpp"
#include "coarse/operator.hpp"
#include "coarse/rep_check.hpp"
#include "coarse/translation.hpp"

namespace coarse {

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double rand_double(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Loopless random graph with max degree capped.
inline UlfGraph random_graph_bounded_degree(Rng& rng, int n, int max_degree) {
  std::vector<std::pair<int, int>> edges;
  if (n >= 2 && max_degree >= 1) {
    std::vector<int> deg(n, 0);
    const int target = rand_int(rng, 0, n * max_degree / 2);
    for (int t = 0; t < 4 * target; ++t) {
      if (static_cast<int>(edges.size()) >= target) break;
      int u = rand_int(rng, 0, n - 1);
      int v = rand_int(rng, 0, n - 1);
      if (u == v || deg[u] >= max_degree || deg[v] >= max_degree) continue;
      auto e = std::minmax(u, v);
      if (std::find(edges.begin(), edges.end(), std::make_pair(e.first, e.second)) != edges.end())
        continue;
      edges.push_back({e.first, e.second});
      ++deg[u];
      ++deg[v];
    }
  }
  return UlfGraph(n, std::move(edges));
}

/// Random spanning tree plus extra edges; always connected.
inline UlfGraph random_connected_graph(Rng& rng, int n, int extra_edges) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.push_back({rand_int(rng, 0, v - 1), v});
  for (int t = 0; t < extra_edges; ++t) {
    int u = rand_int(rng, 0, n - 1);
    int v = rand_int(rng, 0, n - 1);
    if (u != v) edges.push_back({std::min(u, v), std::max(u, v)});
  }
  return UlfGraph(n, std::move(edges));
}

/// Pairing-model random r-regular graph; whole-graph rejection of
/// self-loops and multi-edges. Requires n*r even and r < n.
inline UlfGraph random_regular_graph(Rng& rng, int n, int r) {
  if (n <= 0 || r < 0 || r >= n || (n * r) % 2 != 0)
    throw std::invalid_argument("random_regular_graph: infeasible (n, r)");
  if (r == 0) return UlfGraph(n, {});
  std::vector<int> stubs;
  stubs.reserve(n * r);
  for (int attempt = 0; attempt < 5000; ++attempt) {
    stubs.clear();
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < r; ++i) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<std::pair<int, int>> edges;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v) {
        ok = false;
        break;
      }
      auto e = std::minmax(u, v);
      edges.push_back({e.first, e.second});
    }
    if (!ok) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return UlfGraph(n, std::move(edges));
  }
  throw std::runtime_error("random_regular_graph: rejection limit reached");
}

inline UlfGraph random_connected_regular_graph(Rng& rng, int n, int r) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    UlfGraph g = random_regular_graph(rng, n, r);
    if (g.is_connected()) return g;
  }
  throw std::runtime_error("random_connected_regular_graph: no connected sample found");
}

/// Symmetric relation containing the diagonal, max row degree capped
/// (the diagonal pair counts toward the row degree).
inline Entourage random_symmetric_relation(Rng& rng, int n, int max_row_degree) {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> deg(n, 1);
  for (int i = 0; i < n; ++i) pairs.push_back({i, i});
  if (n >= 2 && max_row_degree >= 2) {
    const int target = rand_int(rng, 0, n * (max_row_degree - 1) / 2);
    for (int t = 0; t < 4 * target; ++t) {
      int u = rand_int(rng, 0, n - 1);
      int v = rand_int(rng, 0, n - 1);
      if (u == v || deg[u] >= max_row_degree || deg[v] >= max_row_degree) continue;
      if (std::find(pairs.begin(), pairs.end(), std::make_pair(u, v)) != pairs.end()) continue;
      pairs.push_back({u, v});
      pairs.push_back({v, u});
      ++deg[u];
      ++deg[v];
    }
  }
  return Entourage(n, std::move(pairs));
}

inline PartialTranslation random_permutation(Rng& rng, int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  std::shuffle(im.begin(), im.end(), rng);
  return PartialTranslation(n, std::move(im));
}

/// Random injective partial map: each point enters the domain with
/// probability 1/2 and images are a random arrangement.
inline PartialTranslation random_partial_injection(Rng& rng, int n) {
  std::vector<int> domain;
  for (int x = 0; x < n; ++x)
    if (rand_int(rng, 0, 1) == 1) domain.push_back(x);
  std::vector<int> targets(n);
  std::iota(targets.begin(), targets.end(), 0);
  std::shuffle(targets.begin(), targets.end(), rng);
  std::vector<int> im(n, PartialTranslation::kUndef);
  for (std::size_t i = 0; i < domain.size(); ++i) im[domain[i]] = targets[i];
  return PartialTranslation(n, std::move(im));
}

/// Random finitely supported probability measure.
inline ProbMeasure random_measure(Rng& rng, int n, int max_support) {
  const int size = rand_int(rng, 1, std::max(1, std::min(n, max_support)));
  std::vector<int> verts(n);
  std::iota(verts.begin(), verts.end(), 0);
  std::shuffle(verts.begin(), verts.end(), rng);
  std::vector<std::pair<int, double>> w;
  for (int i = 0; i < size; ++i) w.push_back({verts[i], rand_double(rng, 0.1, 1.0)});
  return ProbMeasure::normalized(n, std::move(w));
}

inline Matrix random_complex_matrix(Rng& rng, int rows, int cols) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
  return m;
}

/// Random unit vector-valued matrix with k coefficient slices.
inline VecValuedMatrix random_unit_vvm(Rng& rng, int n, int k) {
  std::vector<Matrix> slices;
  slices.reserve(k);
  for (int j = 0; j < k; ++j) slices.push_back(random_complex_matrix(rng, n, n));
  VecValuedMatrix zeta(std::move(slices));
  zeta.scale(1.0 / zeta.norm());
  return zeta;
}

}  // namespace coarse
