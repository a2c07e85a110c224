#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "exitbound/errors.hpp"

namespace exitbound::conic {

using Eigen::MatrixXd;
using Eigen::VectorXd;

inline constexpr double kSqrt2 = 1.4142135623730951;

inline int svec_dim(int d) { return d * (d + 1) / 2; }

/// Index of matrix entry (i,j), i >= j, in the svec ordering. The order is
/// row-major over the lower triangle: (0,0), (1,0), (1,1), (2,0), ...
/// so that e.g. svec(I_3) = [1, 0, 1, 0, 0, 1].
inline int svec_index(int i, int j) {
  if (j > i) std::swap(i, j);
  return i * (i + 1) / 2 + j;
}

/// Scaled vectorization: diagonal entries copied, off-diagonals times
/// sqrt(2), so that dot(svec(A), svec(B)) = trace(A B).
inline VectorXd svec(const MatrixXd& m) {
  const int d = static_cast<int>(m.rows());
  VectorXd v(svec_dim(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j) v(svec_index(i, j)) = (i == j) ? m(i, i) : kSqrt2 * m(i, j);
  return v;
}

inline MatrixXd smat(const VectorXd& v, int d) {
  MatrixXd m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j) {
      const double x = (i == j) ? v(svec_index(i, j)) : v(svec_index(i, j)) / kSqrt2;
      m(i, j) = x;
      m(j, i) = x;
    }
  return m;
}

enum class Cone { Zero, Nonnegative, Psd };

/// One conic constraint: coeffs * x + offset must lie in the cone. For Psd
/// blocks `size` is the matrix order d and the affine data is stored in
/// svec coordinates (length d(d+1)/2).
struct ConeBlock {
  Cone cone = Cone::Nonnegative;
  int size = 0;
  MatrixXd coeffs;
  VectorXd offset;

  int vec_dim() const { return cone == Cone::Psd ? svec_dim(size) : size; }
};

/// Standard-form cone program: maximize objective . x subject to each
/// block's affine map landing in its cone.
struct ConicProblem {
  int num_vars = 0;
  VectorXd objective;
  std::vector<ConeBlock> blocks;

  void validate() const {
    if (num_vars < 0 || objective.size() != num_vars)
      throw ConfigError("ConicProblem: objective size mismatch");
    if (!objective.allFinite()) throw ConfigError("ConicProblem: non-finite objective");
    for (const auto& b : blocks) {
      if (b.size < 1) throw ConfigError("ConicProblem: empty cone block");
      if (b.coeffs.rows() != b.vec_dim() || b.coeffs.cols() != num_vars ||
          b.offset.size() != b.vec_dim())
        throw ConfigError("ConicProblem: block shape mismatch");
      if (!b.coeffs.allFinite() || !b.offset.allFinite())
        throw ConfigError("ConicProblem: non-finite block data");
    }
  }
};

enum class SolveStatus { Optimal, NearOptimal, Infeasible, Unbounded, Failed };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::NearOptimal: return "near_optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
    case SolveStatus::Failed: return "failed";
  }
  return "unknown";
}

struct ConicSolution {
  SolveStatus status = SolveStatus::Failed;
  VectorXd primal;  // present iff status is Optimal or NearOptimal
  double objective_value = std::numeric_limits<double>::quiet_NaN();
  double solver_time = 0.0;
  int iterations = 0;

  bool has_primal() const {
    return status == SolveStatus::Optimal || status == SolveStatus::NearOptimal;
  }
};

struct SolveSettings {
  double feas_tol = 1e-8;
  double gap_tol = 1e-8;
  int max_iterations = 200;
  bool verbose = false;
};

/// Backend contract: deterministic (same problem and settings give the same
/// status and objective), and on Optimal the returned primal satisfies every
/// block within feas_tol (PSD blocks: min eigenvalue >= -1e-7 after
/// de-vectorization).
class ConicBackend {
 public:
  virtual ~ConicBackend() = default;
  virtual ConicSolution solve(const ConicProblem& p, const SolveSettings& s) const = 0;
};

namespace detail {
inline std::string fmt_full(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}
}  // namespace detail

/// Plain-text dump for cross-checking against external solvers. One block
/// per cone; every row lists the coefficients followed by "|" and the
/// offset. PSD rows are svec coordinates in the documented order.
inline void dump_problem(const ConicProblem& p, std::ostream& os) {
  os << "conic-problem v1\n";
  os << "vars " << p.num_vars << "\n";
  os << "maximize";
  for (int j = 0; j < p.num_vars; ++j) os << " " << detail::fmt_full(p.objective(j));
  os << "\n";
  for (const auto& b : p.blocks) {
    os << "block ";
    switch (b.cone) {
      case Cone::Zero: os << "zero " << b.size; break;
      case Cone::Nonnegative: os << "nonneg " << b.size; break;
      case Cone::Psd: os << "psd " << b.size; break;
    }
    os << "\n";
    for (int r = 0; r < b.vec_dim(); ++r) {
      os << "row";
      for (int j = 0; j < p.num_vars; ++j) os << " " << detail::fmt_full(b.coeffs(r, j));
      os << " | " << detail::fmt_full(b.offset(r)) << "\n";
    }
  }
}

}  // namespace exitbound::conic
