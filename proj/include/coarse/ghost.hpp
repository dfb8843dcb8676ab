#pragma once

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "coarse/box_space.hpp"
#include "coarse/operator.hpp"

namespace coarse {

/// Entry-decay profile of an operator along an exhaustion of X:
/// g(k) = max{|a(x,y)| : x or y has exhaustion rank >= k}. The profile
/// is nonincreasing; an operator behaves like a ghost at level delta
/// past k when g(k) <= delta. `exhaustion[r]` is the vertex of rank r;
/// it must be a permutation of the index set.
inline std::vector<double> ghost_profile(const PropOperator& a, const std::vector<int>& exhaustion) {
  const int n = a.dim();
  if (static_cast<int>(exhaustion.size()) != n)
    throw std::invalid_argument("ghost_profile: exhaustion size mismatch");
  std::vector<int> rank(n, -1);
  for (int r = 0; r < n; ++r) {
    const int v = exhaustion[r];
    if (v < 0 || v >= n || rank[v] != -1)
      throw std::invalid_argument("ghost_profile: exhaustion not a permutation");
    rank[v] = r;
  }
  // Bucket each entry by the larger endpoint rank, then suffix-max.
  std::vector<double> profile(n, 0.0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const double m = std::abs(a.mat(x, y));
      if (m == 0.0) continue;
      const int k = std::max(rank[x], rank[y]);
      profile[k] = std::max(profile[k], m);
    }
  for (int k = n - 2; k >= 0; --k) profile[k] = std::max(profile[k], profile[k + 1]);
  return profile;
}

/// Identity exhaustion (vertex order; component order on box spaces).
inline std::vector<double> ghost_profile(const PropOperator& a) {
  std::vector<int> id(a.dim());
  for (int i = 0; i < a.dim(); ++i) id[i] = i;
  return ghost_profile(a, id);
}

inline bool ghost_like(const std::vector<double>& profile, double delta, int past) {
  if (past >= static_cast<int>(profile.size())) return true;
  return profile[past] <= delta;
}

/// Disjoint vertex subsets V_1, ..., V_k of an ambient space, with the
/// pairwise min distances and per-block diameters recorded.
class SparseFamily {
 public:
  SparseFamily(const ExtendedMetric& ambient, std::vector<std::vector<int>> blocks)
      : blocks_(std::move(blocks)) {
    const int n = ambient.size();
    std::vector<char> seen(n, 0);
    for (auto& b : blocks_) {
      std::sort(b.begin(), b.end());
      if (b.empty()) throw std::invalid_argument("SparseFamily: empty block");
      for (int v : b) {
        if (v < 0 || v >= n) throw std::invalid_argument("SparseFamily: vertex out of range");
        if (seen[v]) throw std::invalid_argument("SparseFamily: blocks overlap at vertex " + std::to_string(v));
        seen[v] = 1;
      }
    }
    const int k = static_cast<int>(blocks_.size());
    dist_.assign(static_cast<std::size_t>(k) * k, ExtDist(0));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (i == j) continue;
        ExtDist best = ExtDist::infinity();
        for (int u : blocks_[i])
          for (int v : blocks_[j]) best = std::min(best, ambient(u, v));
        dist_[static_cast<std::size_t>(i) * k + j] = best;
      }
    diam_.reserve(k);
    for (int i = 0; i < k; ++i) {
      ExtDist d(0);
      for (int u : blocks_[i])
        for (int v : blocks_[i]) d = std::max(d, ambient(u, v));
      diam_.push_back(d);
    }
    ambient_size_ = n;
  }

  int block_count() const { return static_cast<int>(blocks_.size()); }
  int ambient_size() const { return ambient_size_; }
  const std::vector<int>& block(int i) const { return blocks_.at(i); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  ExtDist distance(int i, int j) const {
    return dist_.at(static_cast<std::size_t>(i) * blocks_.size() + j);
  }
  ExtDist block_diameter(int i) const { return diam_.at(i); }

  ExtDist max_block_diameter() const {
    ExtDist d(0);
    for (const ExtDist& b : diam_) d = std::max(d, b);
    return d;
  }

  /// dist(V_i, V_j) >= scale for all i != j.
  bool sparse_at_scale(int scale) const {
    const int k = block_count();
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (i != j && distance(i, j) < ExtDist(scale)) return false;
    return true;
  }

 private:
  std::vector<std::vector<int>> blocks_;
  std::vector<ExtDist> dist_;
  std::vector<ExtDist> diam_;
  int ambient_size_ = 0;
};

/// Assemble positive norm-one blocks T_i on the sets V_i into the
/// sparse-diagonal operator sum_i P_{V_i} T P_{V_i}. Each block is
/// validated (Hermitian, PSD, norm 1, tolerance 1e-9); violations
/// report the failing index and the measured value.
inline PropOperator sparse_diagonal(const SparseFamily& fam, const std::vector<PropOperator>& blocks) {
  if (static_cast<int>(blocks.size()) != fam.block_count())
    throw std::invalid_argument("sparse_diagonal: block count mismatch");
  constexpr double kTol = 1e-9;
  for (int i = 0; i < fam.block_count(); ++i) {
    const Matrix& b = blocks[i].mat;
    if (b.rows() != static_cast<int>(fam.block(i).size()))
      throw std::invalid_argument("sparse_diagonal: block " + std::to_string(i) + " dimension mismatch");
    const double herm = (b - b.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kTol)
      throw std::invalid_argument("sparse_diagonal: block " + std::to_string(i) +
                                  " not Hermitian (deviation " + std::to_string(herm) + ")");
    Eigen::SelfAdjointEigenSolver<Matrix> es(b);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    if (lo < -kTol)
      throw std::invalid_argument("sparse_diagonal: block " + std::to_string(i) +
                                  " not positive (min eigenvalue " + std::to_string(lo) + ")");
    if (std::abs(hi - 1.0) > kTol)
      throw std::invalid_argument("sparse_diagonal: block " + std::to_string(i) +
                                  " norm is " + std::to_string(hi) + ", expected 1");
  }
  const int n = fam.ambient_size();
  Matrix out = Matrix::Zero(n, n);
  for (int i = 0; i < fam.block_count(); ++i) {
    const std::vector<int>& v = fam.block(i);
    for (std::size_t p = 0; p < v.size(); ++p)
      for (std::size_t q = 0; q < v.size(); ++q) out(v[p], v[q]) = blocks[i].mat(p, q);
  }
  return PropOperator(std::move(out), fam.max_block_diameter());
}

/// Block-constant rank-one projection J_m / m on every block:
/// the exact sparse-diagonal ghost of a sparse family.
inline PropOperator block_constant_projection(const SparseFamily& fam) {
  std::vector<PropOperator> blocks;
  blocks.reserve(fam.block_count());
  for (int i = 0; i < fam.block_count(); ++i) {
    const int m = static_cast<int>(fam.block(i).size());
    blocks.emplace_back(Matrix::Constant(m, m, Complex(1.0 / m, 0.0)));
  }
  return sparse_diagonal(fam, blocks);
}

/// Blockwise polynomial approximation of the block-constant ghost.
struct BlockGhost {
  PropOperator op;            // p_k(normalized adjacency) on each component
  int poly_degree = 0;        // k in p_k(t) = ((1+t)/2)^k
  std::vector<int> degree;    // per-component regular degree
  std::vector<double> lambda2;  // second-largest normalized eigenvalue (NaN for a point)
  std::vector<double> bound;    // ((1+lambda2)/2)^k, the spectral error bound
};

/// Apply p_k(t) = ((1+t)/2)^k to the degree-normalized adjacency of
/// every component. Since the components are connected and regular,
/// the spectrum lies in [-1, 1] with a simple top eigenvalue 1 whose
/// eigenprojection is J/|V|, so per component
/// ||p_k(A_n) - J/|V_n||| <= ((1 + lambda2)/2)^k. A single-vertex
/// component uses the lazy-walk convention (normalized adjacency = 1),
/// making p_k exact there with bound 0.
inline BlockGhost block_constant_ghost(const BoxSpace& box, int poly_degree) {
  if (poly_degree < 0) throw std::invalid_argument("block_constant_ghost: negative degree");
  BlockGhost out;
  out.poly_degree = poly_degree;
  const int n = box.total_size();
  Matrix assembled = Matrix::Zero(n, n);
  for (int c = 0; c < box.component_count(); ++c) {
    const UlfGraph& g = box.component(c);
    const int m = g.size();
    int degree = static_cast<int>(g.adjacency()[0].size());
    for (int v = 0; v < m; ++v)
      if (static_cast<int>(g.adjacency()[v].size()) != degree)
        throw std::invalid_argument("block_constant_ghost: component " + std::to_string(c + 1) +
                                    " is not regular");
    RealMatrix norm_adj;
    if (m == 1) {
      norm_adj = RealMatrix::Ones(1, 1);
    } else {
      norm_adj = RealMatrix::Zero(m, m);
      for (const auto& [u, v] : g.edges()) {
        norm_adj(u, v) = 1.0 / degree;
        norm_adj(v, u) = 1.0 / degree;
      }
    }
    RealMatrix half = (RealMatrix::Identity(m, m) + norm_adj) / 2.0;
    RealMatrix p = RealMatrix::Identity(m, m);
    for (int i = 0; i < poly_degree; ++i) p = p * half;

    Eigen::SelfAdjointEigenSolver<RealMatrix> es(norm_adj);
    double lam2 = std::numeric_limits<double>::quiet_NaN();
    double bound = 0.0;
    if (m >= 2) {
      lam2 = es.eigenvalues()(m - 2);  // ascending order
      bound = std::pow((1.0 + lam2) / 2.0, poly_degree);
    }
    out.degree.push_back(degree);
    out.lambda2.push_back(lam2);
    out.bound.push_back(bound);

    const int off = box.offset(c);
    for (int u = 0; u < m; ++u)
      for (int v = 0; v < m; ++v) assembled(off + u, off + v) = p(u, v);
  }
  out.op = PropOperator(std::move(assembled), ExtDist(poly_degree));
  return out;
}

}  // namespace coarse
