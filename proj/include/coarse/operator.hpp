#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "coarse/graph.hpp"
#include "coarse/metric.hpp"

namespace coarse {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// Matrix indexed by X x X, optionally carrying a claimed propagation
/// bound relative to some metric (verified, never assumed).
struct PropOperator {
  Matrix mat;
  std::optional<ExtDist> prop_bound;

  PropOperator() = default;
  explicit PropOperator(Matrix m, std::optional<ExtDist> bound = std::nullopt)
      : mat(std::move(m)), prop_bound(bound) {
    if (mat.rows() != mat.cols()) throw std::invalid_argument("PropOperator: matrix not square");
  }

  int dim() const { return static_cast<int>(mat.rows()); }
};

inline PropOperator identity_operator(int n) { return PropOperator(Matrix::Identity(n, n), ExtDist(0)); }

/// 0/1 adjacency matrix (a self-loop contributes a diagonal 1).
inline PropOperator adjacency_operator(const UlfGraph& g) {
  Matrix a = Matrix::Zero(g.size(), g.size());
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return PropOperator(std::move(a), ExtDist(1));
}

/// Least R with every nonzero entry at distance <= R; infinity when a
/// nonzero entry spans a disconnected pair; 0 for the zero matrix.
inline ExtDist propagation(const Matrix& mat, const ExtendedMetric& d) {
  if (mat.rows() != d.size() || mat.cols() != d.size())
    throw std::invalid_argument("propagation: dimension mismatch");
  ExtDist prop(0);
  for (int x = 0; x < mat.rows(); ++x)
    for (int y = 0; y < mat.cols(); ++y)
      if (mat(x, y) != Complex(0.0, 0.0) && d(x, y) > prop) prop = d(x, y);
  return prop;
}

inline ExtDist propagation(const PropOperator& a, const ExtendedMetric& d) {
  return propagation(a.mat, d);
}

/// Largest singular value. Full decomposition up to dimension 512,
/// power iteration on a*a with a deterministic start above that.
inline double operator_norm(const Matrix& mat) {
  const int n = static_cast<int>(mat.rows());
  if (n == 0) return 0.0;
  if (n <= 512) {
    Eigen::BDCSVD<Matrix> svd(mat);
    return svd.singularValues()(0);
  }
  const Matrix gram = mat.adjoint() * mat;
  Vector v = Vector::Ones(n) / std::sqrt(static_cast<double>(n));
  double lambda = 0.0;
  for (int it = 0; it < 20000; ++it) {
    Vector w = gram * v;
    const double norm = w.norm();
    if (norm == 0.0) return 0.0;
    w /= norm;
    const double next = std::real(w.dot(gram * w));
    const bool done = std::abs(next - lambda) <= 1e-10 * std::max(1.0, std::abs(next));
    lambda = next;
    v = std::move(w);
    if (done && it > 2) break;
  }
  return std::sqrt(std::max(0.0, lambda));
}

inline double operator_norm(const PropOperator& a) { return operator_norm(a.mat); }

/// Family of ball restrictions (P_{Ball(x,S)} a P*_{Ball(x,S)})_x.
struct BallCompression {
  int radius = 0;
  std::vector<std::vector<int>> balls;  // sorted vertex lists, one per x
  std::vector<Matrix> blocks;           // block at x has dimension |Ball(x,S)|

  int dim() const { return static_cast<int>(balls.size()); }
};

inline BallCompression compress(const PropOperator& a, int radius, const ExtendedMetric& d) {
  if (radius < 0) throw std::invalid_argument("compress: negative radius");
  if (a.dim() != d.size()) throw std::invalid_argument("compress: dimension mismatch");
  BallCompression out;
  out.radius = radius;
  out.balls.reserve(a.dim());
  out.blocks.reserve(a.dim());
  for (int x = 0; x < a.dim(); ++x) {
    std::vector<int> ball = d.ball(x, radius);
    Matrix block(ball.size(), ball.size());
    for (std::size_t i = 0; i < ball.size(); ++i)
      for (std::size_t j = 0; j < ball.size(); ++j) block(i, j) = a.mat(ball[i], ball[j]);
    out.balls.push_back(std::move(ball));
    out.blocks.push_back(std::move(block));
  }
  return out;
}

}  // namespace coarse
