#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>

#include "exitbound/errors.hpp"
#include "exitbound/linalg.hpp"

namespace exitbound {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// V(x) = x^T Q x + 2 b^T x + c with Q symmetric. The universal object for
/// certificates and region constraints; closed under addition, scaling,
/// Lie derivatives and translations.
class QuadraticFunction {
 public:
  QuadraticFunction(MatrixXd q, VectorXd b, double c)
      : q_(linalg::symmetrize(std::move(q))), b_(std::move(b)), c_(c) {
    if (q_.rows() != q_.cols() || q_.rows() != b_.size())
      throw ConfigError("QuadraticFunction: inconsistent dimensions");
    if (!q_.allFinite() || !b_.allFinite() || !std::isfinite(c_))
      throw ConfigError("QuadraticFunction: non-finite data");
  }

  static QuadraticFunction zero(int n) {
    return {MatrixXd::Zero(n, n), VectorXd::Zero(n), 0.0};
  }

  /// ||x - center||^2 - radius^2; 0-sublevel set is the closed ball.
  static QuadraticFunction ball(const VectorXd& center, double radius) {
    const auto n = center.size();
    return {MatrixXd::Identity(n, n), -center, center.squaredNorm() - radius * radius};
  }

  /// (x_i - lo)(x_i - hi); 0-sublevel set is the slab lo <= x_i <= hi.
  static QuadraticFunction slab(int n, int i, double lo, double hi) {
    MatrixXd q = MatrixXd::Zero(n, n);
    q(i, i) = 1.0;
    VectorXd b = VectorXd::Zero(n);
    b(i) = -0.5 * (lo + hi);
    return {std::move(q), std::move(b), lo * hi};
  }

  /// ||x - p||^2; 0-sublevel set is the singleton {p}.
  static QuadraticFunction point_indicator(const VectorXd& p) { return ball(p, 0.0); }

  int dim() const { return static_cast<int>(b_.size()); }
  const MatrixXd& q() const { return q_; }
  const VectorXd& b() const { return b_; }
  double c() const { return c_; }

  double operator()(const VectorXd& x) const {
    if (x.size() != b_.size()) throw ConfigError("QuadraticFunction: dimension mismatch");
    return x.dot(q_ * x) + 2.0 * b_.dot(x) + c_;
  }

  VectorXd gradient(const VectorXd& x) const { return 2.0 * (q_ * x + b_); }

  /// The (n+1)x(n+1) block [[Q, b],[b^T, c]]; V(x) = [x;1]^T M [x;1].
  MatrixXd psd_block() const {
    const auto n = b_.size();
    MatrixXd m(n + 1, n + 1);
    m.topLeftCorner(n, n) = q_;
    m.topRightCorner(n, 1) = b_;
    m.bottomLeftCorner(1, n) = b_.transpose();
    m(n, n) = c_;
    return m;
  }

  /// V >= 0 everywhere, up to tol on the smallest block eigenvalue.
  bool is_nonnegative(double tol) const {
    if (tol < 0) throw ConfigError("is_nonnegative: tol must be >= 0");
    return min_block_eigenvalue() >= -tol;
  }

  double min_block_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(psd_block(), Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
  }

  /// d/dt V(x(t)) along xdot = A x: x^T(A^T Q + Q A)x + 2 b^T A x.
  QuadraticFunction lie_derivative(const MatrixXd& a) const {
    if (a.rows() != b_.size() || a.cols() != b_.size())
      throw ConfigError("lie_derivative: dimension mismatch");
    return {a.transpose() * q_ + q_ * a, a.transpose() * b_, 0.0};
  }

  /// V'(y) = V(y + shift).
  QuadraticFunction translate(const VectorXd& shift) const {
    if (shift.size() != b_.size()) throw ConfigError("translate: dimension mismatch");
    return {q_, q_ * shift + b_, shift.dot(q_ * shift) + 2.0 * b_.dot(shift) + c_};
  }

  friend QuadraticFunction operator+(const QuadraticFunction& l, const QuadraticFunction& r) {
    return {l.q_ + r.q_, l.b_ + r.b_, l.c_ + r.c_};
  }
  friend QuadraticFunction operator-(const QuadraticFunction& l, const QuadraticFunction& r) {
    return {l.q_ - r.q_, l.b_ - r.b_, l.c_ - r.c_};
  }
  friend QuadraticFunction operator*(double s, const QuadraticFunction& v) {
    return {s * v.q_, s * v.b_, s * v.c_};
  }
  friend QuadraticFunction operator+(const QuadraticFunction& v, double s) {
    return {v.q_, v.b_, v.c_ + s};
  }
  friend QuadraticFunction operator-(const QuadraticFunction& v, double s) { return v + (-s); }

 private:
  MatrixXd q_;
  VectorXd b_;
  double c_;
};

}  // namespace exitbound
