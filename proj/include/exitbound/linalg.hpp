#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "exitbound/errors.hpp"

namespace exitbound::linalg {

using Eigen::MatrixXd;
using Eigen::VectorXd;

inline void require_square(const MatrixXd& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw ConfigError(std::string(who) + ": matrix must be square and nonempty");
  if (!m.allFinite())
    throw ConfigError(std::string(who) + ": matrix has non-finite entries");
}

/// (M + M^T)/2. Symmetric-matrix constructors funnel through here so that
/// entries[i][j] == entries[j][i] holds exactly.
inline MatrixXd symmetrize(const MatrixXd& m) {
  return 0.5 * (m + m.transpose());
}

inline MatrixXd kron(const MatrixXd& a, const MatrixXd& b) {
  MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Eigenvalues with multiplicity, unordered.
inline std::vector<std::complex<double>> eigenvalues(const MatrixXd& m) {
  require_square(m, "eigenvalues");
  Eigen::EigenSolver<MatrixXd> es(m, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw NumericalError("eigenvalues: QR iteration did not converge");
  std::vector<std::complex<double>> out(static_cast<size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) out[static_cast<size_t>(i)] = es.eigenvalues()(i);
  return out;
}

/// min over eigenvalues of -Re(lambda); positive iff the matrix is Hurwitz.
inline double stability_margin(const MatrixXd& m) {
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& ev : eigenvalues(m)) margin = std::min(margin, -ev.real());
  return margin;
}

/// 2-norm condition number sigma_max / sigma_min; +inf for singular input.
inline double condition_number(const MatrixXd& m) {
  require_square(m, "condition_number");
  Eigen::JacobiSVD<MatrixXd> svd(m);
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(m.rows() - 1);
  if (smin <= 0.0 || smax / smin > 1e300)
    return std::numeric_limits<double>::infinity();
  return smax / smin;
}

namespace detail {

// Diagonal Pade approximants for expm, orders 3/5/7/9/13, with the classic
// L1-norm switching thresholds for double precision.
inline void expm_pade(const MatrixXd& a, int order, MatrixXd& u, MatrixXd& v) {
  static const std::vector<std::vector<double>> coeff = {
      {120., 60., 12., 1.},
      {30240., 15120., 3360., 420., 30., 1.},
      {17297280., 8648640., 1995840., 277200., 25200., 1512., 56., 1.},
      {17643225600., 8821612800., 2075673600., 302702400., 30270240., 2162160., 110880., 3960.,
       90., 1.},
      {64764752532480000., 32382376266240000., 7771770303897600., 1187353796428800.,
       129060195264000., 10559470521600., 670442572800., 33522128640., 1323241920., 40840800.,
       960960., 16380., 182., 1.}};
  const auto& b = coeff[static_cast<size_t>(order)];
  const Eigen::Index n = a.rows();
  const MatrixXd id = MatrixXd::Identity(n, n);
  const MatrixXd a2 = a * a;
  if (order <= 3) {
    // orders 3..9: even/odd polynomial split in powers of a2
    std::vector<MatrixXd> pow = {id, a2};
    for (size_t k = 2; 2 * k < b.size(); ++k) pow.push_back(pow.back() * a2);
    MatrixXd podd = MatrixXd::Zero(n, n), peven = MatrixXd::Zero(n, n);
    for (size_t k = 0; k < b.size(); ++k) {
      if (k % 2 == 1)
        podd += b[k] * pow[k / 2];
      else
        peven += b[k] * pow[k / 2];
    }
    u = a * podd;
    v = peven;
    return;
  }
  // order 13
  const MatrixXd a4 = a2 * a2;
  const MatrixXd a6 = a4 * a2;
  MatrixXd w = b[13] * a6 + b[11] * a4 + b[9] * a2;
  u = a * (a6 * w + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
  w = b[12] * a6 + b[10] * a4 + b[8] * a2;
  v = a6 * w + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
}

}  // namespace detail

/// e^{A t} by scaling-and-squaring with diagonal Pade approximants.
inline MatrixXd expm(const MatrixXd& a, double t = 1.0) {
  require_square(a, "expm");
  if (!std::isfinite(t)) throw ConfigError("expm: t must be finite");
  const Eigen::Index n = a.rows();
  MatrixXd at = a * t;
  const double l1 = at.cwiseAbs().colwise().sum().maxCoeff();
  MatrixXd u, v;
  int squarings = 0;
  if (l1 < 1.495585217958292e-2) {
    detail::expm_pade(at, 0, u, v);
  } else if (l1 < 2.539398330063230e-1) {
    detail::expm_pade(at, 1, u, v);
  } else if (l1 < 9.504178996162932e-1) {
    detail::expm_pade(at, 2, u, v);
  } else if (l1 < 2.097847961257068e0) {
    detail::expm_pade(at, 3, u, v);
  } else {
    const double max13 = 5.371920351148152;
    std::frexp(l1 / max13, &squarings);
    if (squarings < 0) squarings = 0;
    at *= std::ldexp(1.0, -squarings);
    detail::expm_pade(at, 4, u, v);
  }
  MatrixXd result = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < squarings; ++i) result *= result;
  if (!result.allFinite())
    throw NumericalError("expm: overflow for ||A t|| = " + std::to_string(l1));
  return result;
}

/// Solves A^T P + P A = -I for strictly stable A via the Kronecker
/// vectorization (A^T (+) A^T) vec(P) = -vec(I).
inline MatrixXd solve_lyapunov(const MatrixXd& a) {
  require_square(a, "solve_lyapunov");
  if (!(stability_margin(a) > 0))
    throw ConfigError("solve_lyapunov: matrix is not strictly stable");
  const Eigen::Index n = a.rows();
  const MatrixXd id = MatrixXd::Identity(n, n);
  const MatrixXd at = a.transpose();
  const MatrixXd k = kron(id, at) + kron(at, id);
  VectorXd rhs = VectorXd::Zero(n * n);
  for (Eigen::Index i = 0; i < n; ++i) rhs(i * n + i) = -1.0;
  Eigen::PartialPivLU<MatrixXd> lu(k);
  VectorXd vec_p = lu.solve(rhs);
  MatrixXd p = symmetrize(Eigen::Map<MatrixXd>(vec_p.data(), n, n));
  const double resid = (at * p + p * a + id).norm();
  if (!(resid <= 1e-10 * std::max(1.0, p.norm())))
    throw NumericalError("solve_lyapunov: Kronecker system nearly singular, residual " +
                         std::to_string(resid));
  return p;
}

}  // namespace exitbound::linalg
