#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coarse/graph.hpp"

namespace coarse {

/// Finite relation on {0, ..., n-1} x {0, ..., n-1}: a set of ordered
/// vertex pairs over a common ground set.
class Entourage {
 public:
  Entourage() : n_(0) {}

  Entourage(int n, std::vector<std::pair<int, int>> pairs) : n_(n), pairs_(std::move(pairs)) {
    if (n < 0) throw std::invalid_argument("Entourage: negative ground size");
    for (const auto& [x, y] : pairs_)
      if (x < 0 || x >= n || y < 0 || y >= n)
        throw std::invalid_argument("Entourage: pair out of range");
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  }

  static Entourage diagonal(int n) {
    std::vector<std::pair<int, int>> p;
    p.reserve(n);
    for (int i = 0; i < n; ++i) p.push_back({i, i});
    return Entourage(n, std::move(p));
  }

  int ground_size() const { return n_; }
  std::size_t size() const { return pairs_.size(); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  bool contains(int x, int y) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), std::make_pair(x, y));
  }

  bool is_symmetric() const {
    for (const auto& [x, y] : pairs_)
      if (!contains(y, x)) return false;
    return true;
  }

  bool contains_diagonal() const {
    for (int i = 0; i < n_; ++i)
      if (!contains(i, i)) return false;
    return true;
  }

  Entourage union_with(const Entourage& other) const {
    if (other.n_ != n_) throw std::invalid_argument("Entourage: ground set mismatch");
    std::vector<std::pair<int, int>> p = pairs_;
    p.insert(p.end(), other.pairs_.begin(), other.pairs_.end());
    return Entourage(n_, std::move(p));
  }

  bool subset_of(const Entourage& other) const {
    for (const auto& [x, y] : pairs_)
      if (!other.contains(x, y)) return false;
    return true;
  }

  friend bool operator==(const Entourage& a, const Entourage& b) {
    return a.n_ == b.n_ && a.pairs_ == b.pairs_;
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> pairs_;  // sorted, unique
};

/// Relational composition E o F = {(x,z) : (x,y) in E, (y,z) in F}.
inline Entourage compose_entourages(const Entourage& e, const Entourage& f) {
  if (e.ground_size() != f.ground_size())
    throw std::invalid_argument("compose_entourages: ground set mismatch");
  const int n = e.ground_size();
  std::vector<std::vector<int>> f_by_first(n);
  for (const auto& [y, z] : f.pairs()) f_by_first[y].push_back(z);
  std::vector<std::pair<int, int>> out;
  for (const auto& [x, y] : e.pairs())
    for (int z : f_by_first[y]) out.push_back({x, z});
  return Entourage(n, std::move(out));
}

/// E^{-1} = {(y,x) : (x,y) in E}.
inline Entourage inverse_entourage(const Entourage& e) {
  std::vector<std::pair<int, int>> out;
  out.reserve(e.size());
  for (const auto& [x, y] : e.pairs()) out.push_back({y, x});
  return Entourage(e.ground_size(), std::move(out));
}

struct UlfDegrees {
  int row;  // max over x of |E ∩ ({x} x X)|
  int col;  // max over x of |E ∩ (X x {x})|
};

/// Max row and column degree of a relation (equal when symmetric).
/// A diagonal pair (x,x) counts once in each.
inline UlfDegrees check_ulf(const Entourage& e) {
  std::vector<int> row(e.ground_size(), 0), col(e.ground_size(), 0);
  for (const auto& [x, y] : e.pairs()) {
    ++row[x];
    ++col[y];
  }
  UlfDegrees d{0, 0};
  for (int r : row) d.row = std::max(d.row, r);
  for (int c : col) d.col = std::max(d.col, c);
  return d;
}

/// Edge relation of a graph: both orientations of every edge
/// (a self-loop contributes one diagonal pair).
inline Entourage adjacency_relation(const UlfGraph& g) {
  std::vector<std::pair<int, int>> p;
  for (const auto& [u, v] : g.edges()) {
    p.push_back({u, v});
    if (u != v) p.push_back({v, u});
  }
  return Entourage(g.size(), std::move(p));
}

}  // namespace coarse
