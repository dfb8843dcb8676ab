#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace coarse {

/// Probability measure on {0, ..., n-1}, stored support-sparse as
/// (index, weight) pairs with strictly positive weights summing to 1
/// (tolerance 1e-12).
class ProbMeasure {
 public:
  ProbMeasure() : n_(0) {}

  ProbMeasure(int n, std::vector<std::pair<int, double>> weights) : n_(n) {
    double sum = 0.0;
    for (const auto& [x, w] : weights) {
      if (x < 0 || x >= n) throw std::invalid_argument("ProbMeasure: index out of range");
      if (w < 0.0) throw std::invalid_argument("ProbMeasure: negative weight");
      if (std::isnan(w)) throw std::invalid_argument("ProbMeasure: NaN weight");
      sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw std::invalid_argument("ProbMeasure: weights sum to " + std::to_string(sum));
    for (const auto& [x, w] : weights)
      if (w > 0.0) entries_.push_back({x, w});
    std::sort(entries_.begin(), entries_.end());
    for (std::size_t i = 1; i < entries_.size(); ++i)
      if (entries_[i].first == entries_[i - 1].first)
        throw std::invalid_argument("ProbMeasure: duplicate index");
  }

  /// Rescale nonnegative weights to total mass 1.
  static ProbMeasure normalized(int n, std::vector<std::pair<int, double>> raw) {
    double sum = 0.0;
    for (const auto& [x, w] : raw) {
      (void)x;
      if (w < 0.0) throw std::invalid_argument("ProbMeasure: negative weight");
      sum += w;
    }
    if (sum <= 0.0) throw std::invalid_argument("ProbMeasure: zero total mass");
    for (auto& [x, w] : raw) w /= sum;
    return ProbMeasure(n, std::move(raw));
  }

  static ProbMeasure delta(int n, int x) { return ProbMeasure(n, {{x, 1.0}}); }

  static ProbMeasure uniform_on(int n, const std::vector<int>& support) {
    if (support.empty()) throw std::invalid_argument("ProbMeasure: empty support");
    std::vector<std::pair<int, double>> w;
    w.reserve(support.size());
    for (int x : support) w.push_back({x, 1.0});
    return normalized(n, std::move(w));
  }

  int ground_size() const { return n_; }
  const std::vector<std::pair<int, double>>& entries() const { return entries_; }

  double at(int x) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(x, 0.0));
    if (it != entries_.end() && it->first == x) return it->second;
    return 0.0;
  }

  std::vector<int> support() const {
    std::vector<int> s;
    s.reserve(entries_.size());
    for (const auto& [x, w] : entries_) s.push_back(x);
    return s;
  }

  double total_mass() const {
    double s = 0.0;
    for (const auto& [x, w] : entries_) s += w;
    return s;
  }

 private:
  int n_;
  std::vector<std::pair<int, double>> entries_;  // sorted by index, positive weights
};

inline double l1_distance(const ProbMeasure& a, const ProbMeasure& b) {
  if (a.ground_size() != b.ground_size())
    throw std::invalid_argument("l1_distance: ground set mismatch");
  double d = 0.0;
  std::size_t i = 0, j = 0;
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
      d += ea[i].second;
      ++i;
    } else if (i == ea.size() || eb[j].first < ea[i].first) {
      d += eb[j].second;
      ++j;
    } else {
      d += std::abs(ea[i].second - eb[j].second);
      ++i;
      ++j;
    }
  }
  return d;
}

}  // namespace coarse
