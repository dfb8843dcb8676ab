#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "coarse/ext_dist.hpp"

namespace coarse {

/// Extended metric on the ground set {0, ..., n-1}, stored as a dense
/// n-by-n table of ExtDist values.
class ExtendedMetric {
 public:
  ExtendedMetric() : n_(0) {}

  ExtendedMetric(int n, std::vector<ExtDist> table) : n_(n), table_(std::move(table)) {
    if (n < 0 || table_.size() != static_cast<std::size_t>(n) * n)
      throw std::invalid_argument("ExtendedMetric: table size mismatch");
  }

  int size() const { return n_; }

  ExtDist operator()(int x, int y) const {
    return table_[static_cast<std::size_t>(x) * n_ + y];
  }

  /// Closed ball {y : d(x, y) <= radius}, sorted.
  std::vector<int> ball(int x, int radius) const {
    std::vector<int> out;
    const ExtDist r(radius);
    for (int y = 0; y < n_; ++y)
      if ((*this)(x, y) <= r) out.push_back(y);
    return out;
  }

  /// Largest pairwise distance; infinity when some pair is disconnected.
  ExtDist diameter() const {
    ExtDist best(0);
    for (const ExtDist& d : table_)
      if (d > best) best = d;
    return best;
  }

  const std::vector<ExtDist>& table() const { return table_; }

 private:
  int n_;
  std::vector<ExtDist> table_;  // row-major, n_*n_
};

}  // namespace coarse
