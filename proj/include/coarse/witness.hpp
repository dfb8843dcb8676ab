#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "coarse/graph.hpp"
#include "coarse/measure.hpp"
#include "coarse/metric.hpp"

namespace coarse {

/// Per-vertex probability measures xi_x, each supported in
/// Ball(x, radius): a finite-scale candidate for the slowly varying
/// families that witness property A.
class Witness {
 public:
  Witness(int radius, std::vector<ProbMeasure> measures)
      : radius_(radius), measures_(std::move(measures)) {
    if (radius < 0) throw std::invalid_argument("Witness: negative radius");
  }

  int ground_size() const { return static_cast<int>(measures_.size()); }
  int radius() const { return radius_; }
  const ProbMeasure& at(int x) const { return measures_.at(x); }
  const std::vector<ProbMeasure>& measures() const { return measures_; }

  /// Every xi_x supported in Ball(x, radius) under the given metric.
  bool respects_radius(const ExtendedMetric& d) const {
    for (int x = 0; x < ground_size(); ++x)
      for (const auto& [y, w] : measures_[x].entries())
        if (d(x, y) > ExtDist(radius_)) return false;
    return true;
  }

 private:
  int radius_;
  std::vector<ProbMeasure> measures_;
};

/// xi_x = uniform measure on Ball(x, S).
inline Witness ball_average_witness(const UlfGraph& g, int radius) {
  if (radius < 0) throw std::invalid_argument("ball_average_witness: negative radius");
  std::vector<ProbMeasure> ms;
  ms.reserve(g.size());
  for (int x = 0; x < g.size(); ++x)
    ms.push_back(ProbMeasure::uniform_on(g.size(), g.metric().ball(x, radius)));
  return Witness(radius, std::move(ms));
}

/// eps = max ||xi_x - xi_y||_1 over pairs x != y with d(x,y) <= R;
/// zero when no such pair exists.
inline double witness_quality(const Witness& w, int scale, const ExtendedMetric& d) {
  if (scale < 0) throw std::invalid_argument("witness_quality: negative scale");
  if (w.ground_size() != d.size()) throw std::invalid_argument("witness_quality: size mismatch");
  double eps = 0.0;
  const ExtDist r(scale);
  for (int x = 0; x < w.ground_size(); ++x)
    for (int y = x + 1; y < w.ground_size(); ++y)
      if (d(x, y) <= r) eps = std::max(eps, l1_distance(w.at(x), w.at(y)));
  return eps;
}

}  // namespace coarse
