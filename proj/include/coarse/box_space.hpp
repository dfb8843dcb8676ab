#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coarse/graph.hpp"
#include "coarse/metric.hpp"

namespace coarse {

/// Disjoint union of finite connected graphs V_1, V_2, ... with an
/// ambient metric that keeps the components genuinely far apart:
/// within a component the graph metric, and across components
///
///   d(x, y) = d_i(x, b_i) + f(i) + f(j) + d_j(b_j, y),
///
/// with basepoints b_i = vertex 0 and separation weights
/// f(i) = i + diam(V_i) (components indexed from 1). This is the path
/// metric of the star gluing each basepoint to a hub by a spoke of
/// length f(i), so the triangle inequality holds, within-component
/// distances are untouched, and dist(V_i, V_j) = f(i) + f(j) grows
/// with i + j (the family is sparse).
class BoxSpace {
 public:
  explicit BoxSpace(std::vector<UlfGraph> components) : components_(std::move(components)) {
    offsets_.reserve(components_.size() + 1);
    int total = 0;
    for (std::size_t i = 0; i < components_.size(); ++i) {
      const UlfGraph& g = components_[i];
      if (g.size() == 0)
        throw std::invalid_argument("BoxSpace: empty component " + std::to_string(i + 1));
      if (!g.is_connected())
        throw std::invalid_argument("BoxSpace: component " + std::to_string(i + 1) +
                                    " is disconnected");
      offsets_.push_back(total);
      total += g.size();
      basepoints_.push_back(0);
      separations_.push_back(static_cast<int>(i) + 1 + static_cast<int>(g.diameter().value()));
    }
    offsets_.push_back(total);
    ambient_ = build_metric(total);
  }

  int component_count() const { return static_cast<int>(components_.size()); }
  int total_size() const { return offsets_.back(); }
  const UlfGraph& component(int i) const { return components_.at(i); }
  int offset(int i) const { return offsets_.at(i); }
  int basepoint(int i) const { return basepoints_.at(i); }

  /// f(i) for the 0-based component index i.
  int separation(int i) const { return separations_.at(i); }

  const ExtendedMetric& ambient_metric() const { return ambient_; }

  /// Ambient vertex sets of the components, in order.
  std::vector<std::vector<int>> component_blocks() const {
    std::vector<std::vector<int>> blocks(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i) {
      blocks[i].resize(components_[i].size());
      for (int v = 0; v < components_[i].size(); ++v) blocks[i][v] = offsets_[i] + v;
    }
    return blocks;
  }

 private:
  ExtendedMetric build_metric(int total) const {
    std::vector<ExtDist> table(static_cast<std::size_t>(total) * total, ExtDist::infinity());
    const int k = component_count();
    for (int i = 0; i < k; ++i) {
      const ExtendedMetric& di = components_[i].metric();
      for (int u = 0; u < components_[i].size(); ++u)
        for (int v = 0; v < components_[i].size(); ++v)
          table[static_cast<std::size_t>(offsets_[i] + u) * total + (offsets_[i] + v)] = di(u, v);
    }
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (i == j) continue;
        const ExtendedMetric& di = components_[i].metric();
        const ExtendedMetric& dj = components_[j].metric();
        const ExtDist spokes(separations_[i] + separations_[j]);
        for (int u = 0; u < components_[i].size(); ++u)
          for (int v = 0; v < components_[j].size(); ++v)
            table[static_cast<std::size_t>(offsets_[i] + u) * total + (offsets_[j] + v)] =
                di(u, basepoints_[i]) + spokes + dj(basepoints_[j], v);
      }
    return ExtendedMetric(total, std::move(table));
  }

  std::vector<UlfGraph> components_;
  std::vector<int> offsets_;
  std::vector<int> basepoints_;
  std::vector<int> separations_;
  ExtendedMetric ambient_;
};

inline BoxSpace box_space(std::vector<UlfGraph> components) {
  return BoxSpace(std::move(components));
}

}  // namespace coarse
