#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "coarse/operator.hpp"
#include "coarse/translation.hpp"

namespace coarse {

/// Complex matrix viewed as a vector with the Hilbert-Schmidt inner
/// product <A,B> = sum conj(A(x,y)) B(x,y), optionally carrying a
/// claimed propagation bound.
struct HSMatrix {
  Matrix mat;
  std::optional<ExtDist> prop_bound;

  HSMatrix() = default;
  explicit HSMatrix(Matrix m, std::optional<ExtDist> bound = std::nullopt)
      : mat(std::move(m)), prop_bound(bound) {
    if (mat.rows() != mat.cols()) throw std::invalid_argument("HSMatrix: matrix not square");
  }

  int dim() const { return static_cast<int>(mat.rows()); }
};

inline Complex hs_inner(const HSMatrix& a, const HSMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("hs_inner: dimension mismatch");
  return (a.mat.conjugate().cwiseProduct(b.mat)).sum();
}

inline double hs_norm(const HSMatrix& a) { return a.mat.norm(); }

/// Left-right action of a pair of operators: Omega -> a Omega b.
inline HSMatrix left_right_apply(const PropOperator& a, const PropOperator& b, const HSMatrix& omega) {
  if (a.dim() != omega.dim() || b.dim() != omega.dim())
    throw std::invalid_argument("left_right_apply: dimension mismatch");
  return HSMatrix(a.mat * omega.mat * b.mat);
}

/// diag(xi) as a Hilbert-Schmidt vector; HS norm = ||xi||_2,
/// propagation 0.
inline HSMatrix diag_embed(const Vector& xi) {
  Matrix m = Matrix::Zero(xi.size(), xi.size());
  for (int i = 0; i < xi.size(); ++i) m(i, i) = xi(i);
  return HSMatrix(std::move(m), ExtDist(0));
}

/// Matrix whose (x,y) cell is a vector in an auxiliary k-dimensional
/// coefficient space K, stored as k scalar matrix slices. The global
/// norm is the Hilbert-Schmidt norm over all cells and coordinates.
class VecValuedMatrix {
 public:
  VecValuedMatrix(int n, int k) : n_(n), k_(k), slices_(k, Matrix::Zero(n, n)) {
    if (n < 0 || k <= 0) throw std::invalid_argument("VecValuedMatrix: bad shape");
  }

  explicit VecValuedMatrix(std::vector<Matrix> slices) : slices_(std::move(slices)) {
    if (slices_.empty()) throw std::invalid_argument("VecValuedMatrix: needs at least one slice");
    n_ = static_cast<int>(slices_.front().rows());
    k_ = static_cast<int>(slices_.size());
    for (const Matrix& s : slices_)
      if (s.rows() != n_ || s.cols() != n_)
        throw std::invalid_argument("VecValuedMatrix: slice shape mismatch");
  }

  int dim() const { return n_; }
  int coeff_dim() const { return k_; }
  const Matrix& slice(int j) const { return slices_.at(j); }
  Matrix& slice(int j) { return slices_.at(j); }

  double norm() const {
    double s = 0.0;
    for (const Matrix& m : slices_) s += m.squaredNorm();
    return std::sqrt(s);
  }

  /// ||cell(x,y)||_K.
  double cell_norm(int x, int y) const {
    double s = 0.0;
    for (const Matrix& m : slices_) s += std::norm(m(x, y));
    return std::sqrt(s);
  }

  void scale(double c) {
    for (Matrix& m : slices_) m *= c;
  }

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<Matrix> slices_;
};

/// Entrywise K-norms: eta(x,y) = ||zeta(x,y)||_K. Nonnegative, same
/// Hilbert-Schmidt norm, support (hence any propagation bound)
/// preserved.
inline HSMatrix norm_reduction(const VecValuedMatrix& zeta) {
  const int n = zeta.dim();
  Matrix eta = Matrix::Zero(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) eta(x, y) = zeta.cell_norm(x, y);
  return HSMatrix(std::move(eta));
}

namespace detail {

/// Omega -> diag(h) P_gamma Omega P_gamma^{-1}: rows are permuted and
/// scaled by h, columns are permuted. Entrywise
/// T(Omega)(x,y) = h(x) Omega(gamma^{-1}x, gamma^{-1}y).
inline Matrix weighted_conjugation(const RealVector& h, const PartialTranslation& gamma,
                                   const Matrix& omega) {
  const int n = static_cast<int>(omega.rows());
  if (!gamma.is_bijection() || gamma.ground_size() != n)
    throw std::invalid_argument("weighted_conjugation: gamma must be a permutation of the index set");
  if (h.size() != n) throw std::invalid_argument("weighted_conjugation: h size mismatch");
  const PartialTranslation inv = gamma.inverse();
  Matrix out(n, n);
  for (int x = 0; x < n; ++x) {
    const int px = *inv.apply(x);
    for (int y = 0; y < n; ++y) out(x, y) = h(x) * omega(px, *inv.apply(y));
  }
  return out;
}

}  // namespace detail

/// Measured state of the three norm-reduction relations for a unit
/// vector-valued zeta with eta = norm_reduction(zeta), a positive
/// diagonal h, a permutation gamma and a real diagonal f:
///   (i)   <eta, h·gamma(eta)>  >=  |<zeta, h·gamma(zeta)>|   (Cauchy-Schwarz cellwise),
///   (ii)  ||h·gamma(eta)||  =  ||h·gamma(zeta)||             (exact),
///   (iii) <eta, f eta>  =  <zeta, f zeta>                    (exact),
/// where h·gamma acts by Omega -> diag(h) P_gamma Omega P_gamma^{-1}
/// and f by left multiplication.
struct LemmaReport {
  double lhs_i = 0.0;
  double rhs_i = 0.0;
  double slack_i = 0.0;          // lhs_i - rhs_i, >= 0 up to rounding
  double norm_residual = 0.0;    // | (ii) left - right |
  double state_residual = 0.0;   // | (iii) left - right |
};

inline LemmaReport lemma_inequalities(const VecValuedMatrix& zeta, const RealVector& h,
                                      const PartialTranslation& gamma, const RealVector& f) {
  const int n = zeta.dim();
  if (h.size() != n || f.size() != n || gamma.ground_size() != n)
    throw std::invalid_argument("lemma_inequalities: shape mismatch");
  for (int i = 0; i < n; ++i)
    if (h(i) <= 0.0) throw std::invalid_argument("lemma_inequalities: h must be entrywise positive");

  const HSMatrix eta = norm_reduction(zeta);
  const Matrix teta = detail::weighted_conjugation(h, gamma, eta.mat);

  LemmaReport rep;
  rep.lhs_i = std::real((eta.mat.conjugate().cwiseProduct(teta)).sum());

  Complex rhs(0.0, 0.0);
  double tz_sq = 0.0;
  for (int j = 0; j < zeta.coeff_dim(); ++j) {
    const Matrix tz = detail::weighted_conjugation(h, gamma, zeta.slice(j));
    rhs += (zeta.slice(j).conjugate().cwiseProduct(tz)).sum();
    tz_sq += tz.squaredNorm();
  }
  rep.rhs_i = std::abs(rhs);
  rep.slack_i = rep.lhs_i - rep.rhs_i;

  rep.norm_residual = std::abs(teta.norm() - std::sqrt(tz_sq));

  double state_eta = 0.0, state_zeta = 0.0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      state_eta += f(x) * std::norm(eta.mat(x, y));
      state_zeta += f(x) * zeta.cell_norm(x, y) * zeta.cell_norm(x, y);
    }
  rep.state_residual = std::abs(state_eta - state_zeta);
  return rep;
}

/// Exact finite form of "the vector state factors through the
/// compression": for eta of propagation <= S,
///   <eta, a eta>_HS = sum_y <omega^y, Phi_S(a)_y omega^y>
/// with omega^y = column y of eta restricted to Ball(y, S).
struct CompressionReport {
  Complex lhs{0.0, 0.0};
  Complex rhs{0.0, 0.0};
  double residual = 0.0;
};

inline CompressionReport compression_state_identity(const HSMatrix& eta, const PropOperator& a,
                                                    int radius, const ExtendedMetric& d) {
  if (eta.dim() != a.dim() || eta.dim() != d.size())
    throw std::invalid_argument("compression_state_identity: dimension mismatch");
  const ExtDist actual = propagation(eta.mat, d);
  if (actual > ExtDist(radius))
    throw std::invalid_argument("compression_state_identity: eta propagation " + actual.str() +
                                " exceeds radius " + std::to_string(radius));

  CompressionReport rep;
  rep.lhs = (eta.mat.conjugate().cwiseProduct(a.mat * eta.mat)).sum();

  const BallCompression comp = compress(a, radius, d);
  for (int y = 0; y < eta.dim(); ++y) {
    const std::vector<int>& ball = comp.balls[y];
    Vector omega(ball.size());
    for (std::size_t i = 0; i < ball.size(); ++i) omega(i) = eta.mat(ball[i], y);
    rep.rhs += omega.dot(comp.blocks[y] * omega);
  }
  rep.residual = std::abs(rep.lhs - rep.rhs);
  return rep;
}

}  // namespace coarse
