#pragma once

#include <algorithm>
#include <memory>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coarse/metric.hpp"

namespace coarse {

/// Finite undirected graph on {0, ..., n-1}; self-loops permitted,
/// possibly disconnected. The all-pairs extended graph metric is
/// computed eagerly (one BFS per vertex) and shared, so copies are
/// cheap and every accessor is safe under concurrent reads.
class UlfGraph {
 public:
  UlfGraph() : UlfGraph(0, {}) {}

  UlfGraph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 0) throw std::invalid_argument("UlfGraph: negative vertex count");
    for (auto& [u, v] : edge_list) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("UlfGraph: edge endpoint out of range");
      if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);

    adj_.resize(n_);
    for (const auto& [u, v] : edges_) {
      adj_[u].push_back(v);
      if (u != v) adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    max_degree_ = 0;
    for (const auto& nb : adj_) max_degree_ = std::max<int>(max_degree_, nb.size());

    metric_ = std::make_shared<ExtendedMetric>(bfs_all_pairs());
  }

  int size() const { return n_; }

  /// Canonical edge list: unordered pairs with u <= v, sorted, unique.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Neighbor lists; a self-loop contributes the vertex itself once.
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }

  /// M = max over x of |{y : (x,y) is an edge}|.
  int max_degree() const { return max_degree_; }

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
  }

  const ExtendedMetric& metric() const { return *metric_; }

  bool is_connected() const {
    if (n_ <= 1) return true;
    for (int y = 0; y < n_; ++y)
      if ((*metric_)(0, y).is_inf()) return false;
    return true;
  }

  ExtDist diameter() const { return metric_->diameter(); }

 private:
  ExtendedMetric bfs_all_pairs() const {
    std::vector<ExtDist> table(static_cast<std::size_t>(n_) * n_, ExtDist::infinity());
    std::vector<std::int64_t> dist(n_);
    for (int src = 0; src < n_; ++src) {
      std::fill(dist.begin(), dist.end(), -1);
      std::queue<int> q;
      dist[src] = 0;
      q.push(src);
      while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : adj_[x]) {
          if (dist[y] < 0) {
            dist[y] = dist[x] + 1;
            q.push(y);
          }
        }
      }
      for (int y = 0; y < n_; ++y)
        if (dist[y] >= 0) table[static_cast<std::size_t>(src) * n_ + y] = ExtDist(dist[y]);
    }
    return ExtendedMetric(n_, std::move(table));
  }

  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  int max_degree_;
  std::shared_ptr<const ExtendedMetric> metric_;
};

/// All-pairs shortest-path distances, infinity across components.
inline const ExtendedMetric& graph_metric(const UlfGraph& g) { return g.metric(); }

/// Cycle graph C_n (n >= 3), path for n = 2, a point for n = 1.
inline UlfGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  if (n == 2) edges.push_back({0, 1});
  if (n >= 3)
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return UlfGraph(n, std::move(edges));
}

/// Complete graph K_n.
inline UlfGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return UlfGraph(n, std::move(edges));
}

}  // namespace coarse
