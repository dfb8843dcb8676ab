#pragma once

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include "coarse/operator.hpp"
#include "coarse/translation.hpp"

namespace coarse {

struct TopEigen {
  RealVector xi;        // unit, entrywise >= 0
  Vector unitary;       // diagonal phases u with u·(raw eigenvector) = xi
  double lambda = 0.0;  // top eigenvalue
  double eig_residual = 0.0;    // ||t' xi - lambda xi|| for t' = u t u*
  double fixed_residual = 0.0;  // ||t' xi - xi||
  double gap = 0.0;             // lambda - (second eigenvalue)
};

/// Top eigenvector of a positive operator, made entrywise nonnegative
/// by conjugating with a diagonal phase unitary (which preserves the
/// spectrum). The raw eigenvector's global phase is first fixed so its
/// largest-magnitude entry is positive real, making the output
/// deterministic up to solver behavior. If the top eigenspace is
/// degenerate (gap < 1e-8) the absolute-value vector of an arbitrary
/// top eigenvector is used and re-verified; a residual above 1e-6 is
/// an error reporting the gap.
inline TopEigen nonneg_top_eigenvector(const PropOperator& t) {
  const int n = t.dim();
  if (n == 0) throw std::invalid_argument("nonneg_top_eigenvector: empty operator");
  if ((t.mat - t.mat.adjoint()).cwiseAbs().maxCoeff() > 1e-8)
    throw std::invalid_argument("nonneg_top_eigenvector: operator not Hermitian");

  Eigen::SelfAdjointEigenSolver<Matrix> es(t.mat);
  TopEigen out;
  out.lambda = es.eigenvalues()(n - 1);
  out.gap = n >= 2 ? out.lambda - es.eigenvalues()(n - 2)
                   : std::numeric_limits<double>::infinity();

  Vector raw = es.eigenvectors().col(n - 1);
  int lead = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(raw(i)) > std::abs(raw(lead))) lead = i;
  if (std::abs(raw(lead)) > 0.0) raw *= std::conj(raw(lead)) / std::abs(raw(lead));

  out.unitary = Vector::Ones(n);
  out.xi = RealVector::Zero(n);
  for (int i = 0; i < n; ++i) {
    const double m = std::abs(raw(i));
    if (m > 0.0) out.unitary(i) = std::conj(raw(i)) / m;
    out.xi(i) = m;
  }

  const Matrix conj_t =
      out.unitary.asDiagonal() * t.mat * out.unitary.conjugate().asDiagonal();
  const Vector txi = conj_t * out.xi.cast<Complex>();
  out.eig_residual = (txi - out.lambda * out.xi.cast<Complex>()).norm();
  out.fixed_residual = (txi - out.xi.cast<Complex>()).norm();

  if (out.gap < 1e-8 && out.eig_residual > 1e-6)
    throw std::runtime_error(
        "nonneg_top_eigenvector: degenerate top eigenspace (gap " + std::to_string(out.gap) +
        ") has no nonnegative representative (residual " + std::to_string(out.eig_residual) + ")");
  return out;
}

struct HGamma {
  RealVector h;            // entrywise positive, 1 off the supports
  double sup_error = 0.0;  // || h · (xi ∘ gamma^{-1}) - xi ||_inf over the supports
};

/// Diagonal correction h with h(x) xi(gamma^{-1} x) = xi(x) on the
/// support blocks and h = 1 elsewhere. gamma^{-1}x is read inside the
/// block of x; when it lands outside, is undefined, or hits a zero
/// entry, the value is floored at delta times the smallest positive
/// entry of xi, keeping h positive and invertible. The numerator is
/// floored the same way. The floor-induced deviation from the exact
/// intertwining identity is reported; it is zero whenever xi is
/// positive on the blocks and gamma maps each block onto itself.
inline HGamma h_gamma(const RealVector& xi, const std::vector<std::vector<int>>& supports,
                      const PartialTranslation& gamma, double delta = 1e-6) {
  if (delta <= 0.0) throw std::invalid_argument("h_gamma: delta must be positive");
  const int n = static_cast<int>(xi.size());
  if (gamma.ground_size() != n) throw std::invalid_argument("h_gamma: ground set mismatch");
  for (int i = 0; i < n; ++i)
    if (xi(i) < 0.0) throw std::invalid_argument("h_gamma: xi must be entrywise nonnegative");

  double min_pos = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    if (xi(i) > 0.0) min_pos = std::min(min_pos, xi(i));
  const double floor = std::isfinite(min_pos) ? delta * min_pos : delta;

  std::vector<int> block_of(n, -1);
  for (std::size_t b = 0; b < supports.size(); ++b)
    for (int v : supports[b]) {
      if (v < 0 || v >= n) throw std::invalid_argument("h_gamma: support vertex out of range");
      if (block_of[v] != -1) throw std::invalid_argument("h_gamma: supports overlap");
      block_of[v] = static_cast<int>(b);
    }

  const PartialTranslation inv = gamma.inverse();
  HGamma out;
  out.h = RealVector::Ones(n);
  for (int x = 0; x < n; ++x) {
    if (block_of[x] < 0) continue;
    double pulled = 0.0;  // xi(gamma^{-1} x) read inside the block of x
    if (inv.defined_at(x)) {
      const int p = *inv.apply(x);
      if (block_of[p] == block_of[x]) pulled = xi(p);
    }
    out.h(x) = std::max(xi(x), floor) / std::max(pulled, floor);
    out.sup_error = std::max(out.sup_error, std::abs(out.h(x) * pulled - xi(x)));
  }
  return out;
}

}  // namespace coarse
