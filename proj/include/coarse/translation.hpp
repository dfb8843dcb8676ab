#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coarse/entourage.hpp"

namespace coarse {

/// Injective partial map on {0, ..., n-1}. Its graph {(γx, x)} is a
/// relation of row and column degree at most one; these are the
/// generator objects for coarse structures.
class PartialTranslation {
 public:
  PartialTranslation() : n_(0) {}

  /// `image[x]` is γx, or -1 when x is outside the domain.
  PartialTranslation(int n, std::vector<int> image) : n_(n), map_(std::move(image)) {
    if (n < 0 || map_.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("PartialTranslation: image size mismatch");
    std::vector<char> hit(n, 0);
    for (int x = 0; x < n_; ++x) {
      int y = map_[x];
      if (y == kUndef) continue;
      if (y < 0 || y >= n) throw std::invalid_argument("PartialTranslation: image out of range");
      if (hit[y]) throw std::invalid_argument("PartialTranslation: not injective");
      hit[y] = 1;
    }
  }

  static PartialTranslation identity(int n) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i;
    return PartialTranslation(n, std::move(im));
  }

  static PartialTranslation empty_map(int n) {
    return PartialTranslation(n, std::vector<int>(n, kUndef));
  }

  int ground_size() const { return n_; }
  bool defined_at(int x) const { return map_[x] != kUndef; }

  std::optional<int> apply(int x) const {
    if (!defined_at(x)) return std::nullopt;
    return map_[x];
  }

  /// Raw image table, -1 for undefined.
  const std::vector<int>& image_table() const { return map_; }

  int domain_size() const {
    int c = 0;
    for (int v : map_) c += (v != kUndef);
    return c;
  }

  bool is_total() const { return domain_size() == n_; }
  bool is_bijection() const { return is_total(); }  // injective + total on a finite set

  PartialTranslation inverse() const {
    std::vector<int> inv(n_, kUndef);
    for (int x = 0; x < n_; ++x)
      if (map_[x] != kUndef) inv[map_[x]] = x;
    return PartialTranslation(n_, std::move(inv));
  }

  /// this ∘ other (apply `other` first).
  PartialTranslation compose(const PartialTranslation& other) const {
    if (other.n_ != n_) throw std::invalid_argument("PartialTranslation: ground set mismatch");
    std::vector<int> im(n_, kUndef);
    for (int x = 0; x < n_; ++x) {
      int mid = other.map_[x];
      if (mid != kUndef && map_[mid] != kUndef) im[x] = map_[mid];
    }
    return PartialTranslation(n_, std::move(im));
  }

  /// graph(γ) = {(γx, x) : x in dom γ}.
  Entourage graph() const {
    std::vector<std::pair<int, int>> p;
    for (int x = 0; x < n_; ++x)
      if (map_[x] != kUndef) p.push_back({map_[x], x});
    return Entourage(n_, std::move(p));
  }

  friend bool operator==(const PartialTranslation& a, const PartialTranslation& b) {
    return a.n_ == b.n_ && a.map_ == b.map_;
  }

  static constexpr int kUndef = -1;

 private:
  int n_;
  std::vector<int> map_;
};

/// True iff p is total and p ∘ p = id.
inline bool is_involution(const PartialTranslation& p) {
  if (!p.is_total()) return false;
  const int n = p.ground_size();
  for (int x = 0; x < n; ++x)
    if (p.image_table()[p.image_table()[x]] != x) return false;
  return true;
}

/// The 2x2 trick: embed a partial injection γ as a total involution
/// on two copies of X. A point x of the first copy with x in dom(γ)
/// swaps with γx in the second copy; everything else is fixed. The
/// permutation matrix is the self-adjoint {0,1}-valued unitary built
/// from the blocks 1-γγ*, γ, γ*, 1-γ*γ.
///
/// Indexing: the first copy is [0, n), the second copy is [n, 2n).
inline PartialTranslation two_by_two(const PartialTranslation& gamma) {
  const int n = gamma.ground_size();
  const PartialTranslation inv = gamma.inverse();
  std::vector<int> im(2 * n);
  for (int x = 0; x < n; ++x)
    im[x] = gamma.defined_at(x) ? n + *gamma.apply(x) : x;
  for (int y = 0; y < n; ++y)
    im[n + y] = inv.defined_at(y) ? *inv.apply(y) : n + y;
  return PartialTranslation(2 * n, std::move(im));
}

}  // namespace coarse
