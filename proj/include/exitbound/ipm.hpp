#pragma once

// Interior-point backend for the ConicBackend contract: a Nesterov-Todd
// scaled primal-dual predictor-corrector method over products of
// nonnegative-orthant and PSD cones, in the standard pairing
//
//   maximize c.x  s.t.  s = A x + b,  s in K
//   minimize b.z  s.t.  A^T z + c = 0, z in K*
//
// with duality gap <s, z>. Zero cones are eliminated up front by a
// null-space reparametrization, and the problem data is equilibrated
// (per-row scaling on orthant rows, diagonal congruence on PSD blocks,
// column scaling on variables) before iterating. The Newton systems are
// reduced to the m x m normal equations H = (W^{-T}A)^T (W^{-T}A) with one
// round of iterative refinement, which is adequate at the problem sizes
// this library targets (a few hundred variables).

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <vector>

#include "exitbound/conic.hpp"

namespace exitbound::conic {

namespace ipm_detail {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct BlockRef {
  Cone cone;
  int size;    // orthant rows or PSD order
  int offset;  // start in the stacked vectors
  int vdim;    // stacked length
};

struct Stacked {
  MatrixXd a;  // p x m
  VectorXd b;  // p
  VectorXd c;  // m
  std::vector<BlockRef> blocks;
  int degree = 0;  // total cone degree (orthant rows + PSD orders)
};

// Identity element of the cone product: ones on orthant rows, svec(I) on
// PSD blocks.
inline VectorXd cone_identity(const Stacked& st) {
  VectorXd e = VectorXd::Zero(st.b.size());
  for (const auto& blk : st.blocks) {
    if (blk.cone == Cone::Nonnegative) {
      e.segment(blk.offset, blk.vdim).setOnes();
    } else {
      for (int i = 0; i < blk.size; ++i) e(blk.offset + svec_index(i, i)) = 1.0;
    }
  }
  return e;
}

// Smallest "eigenvalue" of u over the cone product (componentwise on the
// orthant, matrix eigenvalue on PSD blocks).
inline double cone_min_eig(const Stacked& st, const VectorXd& u) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& blk : st.blocks) {
    if (blk.cone == Cone::Nonnegative) {
      m = std::min(m, u.segment(blk.offset, blk.vdim).minCoeff());
    } else {
      Eigen::SelfAdjointEigenSolver<MatrixXd> es(smat(u.segment(blk.offset, blk.vdim), blk.size),
                                                 Eigen::EigenvaluesOnly);
      m = std::min(m, es.eigenvalues()(0));
    }
  }
  return m;
}

// sup { alpha >= 0 : u + alpha du in K }, possibly +inf.
inline double max_step(const Stacked& st, const VectorXd& u, const VectorXd& du) {
  double amax = std::numeric_limits<double>::infinity();
  for (const auto& blk : st.blocks) {
    if (blk.cone == Cone::Nonnegative) {
      for (int i = 0; i < blk.vdim; ++i) {
        const double d = du(blk.offset + i);
        if (d < 0) amax = std::min(amax, -u(blk.offset + i) / d);
      }
    } else {
      const MatrixXd s = smat(u.segment(blk.offset, blk.vdim), blk.size);
      const MatrixXd ds = smat(du.segment(blk.offset, blk.vdim), blk.size);
      Eigen::LLT<MatrixXd> llt(s);
      if (llt.info() != Eigen::Success) return 0.0;
      MatrixXd t = llt.matrixL().solve(ds);
      t = llt.matrixL().solve(MatrixXd(t.transpose()));
      Eigen::SelfAdjointEigenSolver<MatrixXd> es(t, Eigen::EigenvaluesOnly);
      const double lmin = es.eigenvalues()(0);
      if (lmin < 0) amax = std::min(amax, -1.0 / lmin);
    }
  }
  return amax;
}

// Nesterov-Todd scaling at (s, z): W z = W^{-T} s = lambda. For PSD blocks,
// with S = Ls Ls^T, Z = Lz Lz^T and Lz^T Ls = U Sig V^T, the scaling matrix
// is R = Lz^{-T} U Sig^{1/2} acting by congruence.
struct Scaling {
  struct PsdPart {
    MatrixXd r, rinv;
    VectorXd lam;  // Sig diagonal
  };
  std::vector<VectorXd> orthant_w;      // per block (empty for PSD)
  std::vector<VectorXd> orthant_lam;
  std::vector<PsdPart> psd;             // per block (unused for orthant)
  bool ok = false;
};

inline Scaling compute_scaling(const Stacked& st, const VectorXd& s, const VectorXd& z) {
  Scaling w;
  w.orthant_w.resize(st.blocks.size());
  w.orthant_lam.resize(st.blocks.size());
  w.psd.resize(st.blocks.size());
  for (size_t k = 0; k < st.blocks.size(); ++k) {
    const auto& blk = st.blocks[k];
    if (blk.cone == Cone::Nonnegative) {
      const auto sk = s.segment(blk.offset, blk.vdim).array();
      const auto zk = z.segment(blk.offset, blk.vdim).array();
      if ((sk <= 0).any() || (zk <= 0).any()) return w;
      w.orthant_w[k] = (sk / zk).sqrt();
      w.orthant_lam[k] = (sk * zk).sqrt();
    } else {
      const MatrixXd sk = smat(s.segment(blk.offset, blk.vdim), blk.size);
      const MatrixXd zk = smat(z.segment(blk.offset, blk.vdim), blk.size);
      Eigen::LLT<MatrixXd> ls(sk), lz(zk);
      if (ls.info() != Eigen::Success || lz.info() != Eigen::Success) return w;
      const MatrixXd lsm = ls.matrixL();
      const MatrixXd lzm = lz.matrixL();
      Eigen::JacobiSVD<MatrixXd> svd(MatrixXd(lzm.transpose() * lsm),
                                     Eigen::ComputeFullU | Eigen::ComputeFullV);
      const VectorXd lam = svd.singularValues();
      if (lam(blk.size - 1) <= 0) return w;
      const VectorXd sq = lam.array().sqrt();
      MatrixXd r = lzm.transpose().triangularView<Eigen::Upper>().solve(MatrixXd(svd.matrixU()));
      for (int j = 0; j < blk.size; ++j) r.col(j) *= sq(j);
      MatrixXd rinv = sq.asDiagonal().inverse() * svd.matrixU().transpose() * lzm.transpose();
      w.psd[k].r = std::move(r);
      w.psd[k].rinv = std::move(rinv);
      w.psd[k].lam = lam;
    }
  }
  w.ok = true;
  return w;
}

enum class ScaleOp { W, WT, Winv, WinvT };

// Applies the block-diagonal scaling (or transpose/inverse) to a stacked
// vector: W(u) = R^T U R on PSD blocks, diag(w) u on orthant rows.
inline VectorXd apply_scaling(const Stacked& st, const Scaling& w, ScaleOp op,
                              const VectorXd& u) {
  VectorXd out(u.size());
  for (size_t k = 0; k < st.blocks.size(); ++k) {
    const auto& blk = st.blocks[k];
    if (blk.cone == Cone::Nonnegative) {
      const auto& wk = w.orthant_w[k];
      auto seg = u.segment(blk.offset, blk.vdim).array();
      if (op == ScaleOp::W || op == ScaleOp::WT)
        out.segment(blk.offset, blk.vdim) = seg * wk.array();
      else
        out.segment(blk.offset, blk.vdim) = seg / wk.array();
    } else {
      const MatrixXd um = smat(u.segment(blk.offset, blk.vdim), blk.size);
      const MatrixXd& r = w.psd[k].r;
      const MatrixXd& ri = w.psd[k].rinv;
      MatrixXd res;
      switch (op) {
        case ScaleOp::W: res = r.transpose() * um * r; break;
        case ScaleOp::WT: res = r * um * r.transpose(); break;
        case ScaleOp::Winv: res = ri.transpose() * um * ri; break;
        case ScaleOp::WinvT: res = ri * um * ri.transpose(); break;
      }
      out.segment(blk.offset, blk.vdim) = svec(res);
    }
  }
  return out;
}

// Equilibration record: original x = colscale .* scaled x.
struct Equilibration {
  VectorXd colscale;
};

inline Equilibration equilibrate(Stacked& st, std::vector<BlockRef>& blocks) {
  const int m = static_cast<int>(st.c.size());
  Equilibration eq;
  eq.colscale = VectorXd::Ones(m);
  auto clamps = [](double v) { return std::clamp(v, 1e-6, 1e6); };
  for (int round = 0; round < 2; ++round) {
    for (const auto& blk : blocks) {
      if (blk.cone == Cone::Nonnegative) {
        for (int r = 0; r < blk.vdim; ++r) {
          const int row = blk.offset + r;
          const double mx = st.a.row(row).cwiseAbs().maxCoeff();
          if (mx > 0) {
            const double rho = clamps(1.0 / std::sqrt(mx));
            st.a.row(row) *= rho;
            st.b(row) *= rho;
          }
        }
      } else {
        // Per-index magnitudes in matrix coordinates; congruence scaling
        // with diag(d) keeps the PSD structure intact.
        VectorXd mag = VectorXd::Zero(blk.size);
        for (int i = 0; i < blk.size; ++i)
          for (int j = 0; j <= i; ++j) {
            const int row = blk.offset + svec_index(i, j);
            double mx = st.a.row(row).cwiseAbs().maxCoeff();
            mx = std::max(mx, std::abs(st.b(row)));
            mag(i) = std::max(mag(i), mx);
            mag(j) = std::max(mag(j), mx);
          }
        VectorXd d(blk.size);
        for (int i = 0; i < blk.size; ++i) d(i) = mag(i) > 0 ? clamps(1.0 / std::sqrt(std::sqrt(mag(i)))) : 1.0;
        for (int i = 0; i < blk.size; ++i)
          for (int j = 0; j <= i; ++j) {
            const int row = blk.offset + svec_index(i, j);
            const double f = d(i) * d(j);
            st.a.row(row) *= f;
            st.b(row) *= f;
          }
      }
    }
    for (int j = 0; j < m; ++j) {
      const double mx = st.a.col(j).cwiseAbs().maxCoeff();
      if (mx > 0) {
        const double g = clamps(1.0 / std::sqrt(mx));
        st.a.col(j) *= g;
        eq.colscale(j) *= g;
      }
    }
  }
  st.c = st.c.cwiseProduct(eq.colscale);
  return eq;
}

struct IterateQuality {
  double pres = std::numeric_limits<double>::infinity();
  double dres = std::numeric_limits<double>::infinity();
  double relgap = std::numeric_limits<double>::infinity();
  double merit() const { return std::max({pres, dres, relgap}); }
};

}  // namespace ipm_detail

class NtIpmBackend final : public ConicBackend {
 public:
  ConicSolution solve(const ConicProblem& problem, const SolveSettings& settings) const override {
    using namespace ipm_detail;
    const auto t_start = std::chrono::steady_clock::now();
    problem.validate();
    ConicSolution sol = solve_impl(problem, settings);
    sol.solver_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return sol;
  }

 private:
  ConicSolution solve_impl(const ConicProblem& problem, const SolveSettings& settings) const {
    using namespace ipm_detail;
    using Eigen::MatrixXd;
    using Eigen::VectorXd;

    // --- Zero-cone elimination: x = x_p + N y with E x + f = 0. ---
    int zero_rows = 0;
    for (const auto& b : problem.blocks)
      if (b.cone == Cone::Zero) zero_rows += b.size;
    if (zero_rows > 0) {
      MatrixXd e(zero_rows, problem.num_vars);
      VectorXd f(zero_rows);
      int at = 0;
      for (const auto& b : problem.blocks)
        if (b.cone == Cone::Zero) {
          e.middleRows(at, b.size) = b.coeffs;
          f.segment(at, b.size) = b.offset;
          at += b.size;
        }
      Eigen::JacobiSVD<MatrixXd> svd(e, Eigen::ComputeThinU | Eigen::ComputeFullV);
      VectorXd xp = svd.solve(-f);
      if ((e * xp + f).lpNorm<Eigen::Infinity>() > 1e-8 * (1.0 + f.lpNorm<Eigen::Infinity>())) {
        ConicSolution out;
        out.status = SolveStatus::Infeasible;
        return out;
      }
      const int rank = static_cast<int>(svd.rank());
      const int kdim = problem.num_vars - rank;
      MatrixXd nbasis = svd.matrixV().rightCols(kdim);
      ConicProblem reduced;
      reduced.num_vars = kdim;
      reduced.objective = nbasis.transpose() * problem.objective;
      for (const auto& b : problem.blocks) {
        if (b.cone == Cone::Zero) continue;
        ConeBlock nb;
        nb.cone = b.cone;
        nb.size = b.size;
        nb.coeffs = b.coeffs * nbasis;
        nb.offset = b.offset + b.coeffs * xp;
        reduced.blocks.push_back(std::move(nb));
      }
      ConicSolution inner =
          kdim == 0 ? evaluate_fixed_point(reduced) : solve_impl(reduced, settings);
      if (inner.has_primal()) {
        inner.primal = (xp + nbasis * inner.primal).eval();
        inner.objective_value = problem.objective.dot(inner.primal);
      } else if (inner.status == SolveStatus::Unbounded || kdim == 0) {
        // status carries over unchanged
      }
      return inner;
    }

    // --- Degenerate shapes. ---
    if (problem.blocks.empty()) {
      ConicSolution out;
      if (problem.objective.lpNorm<Eigen::Infinity>() == 0.0) {
        out.status = SolveStatus::Optimal;
        out.primal = VectorXd::Zero(problem.num_vars);
        out.objective_value = 0.0;
      } else {
        out.status = SolveStatus::Unbounded;
      }
      return out;
    }
    if (problem.num_vars == 0) return evaluate_fixed_point(problem);

    // --- Stack and equilibrate. ---
    Stacked st;
    {
      int p = 0;
      for (const auto& b : problem.blocks) p += b.vec_dim();
      st.a.resize(p, problem.num_vars);
      st.b.resize(p);
      int at = 0;
      for (const auto& b : problem.blocks) {
        st.blocks.push_back({b.cone, b.size, at, b.vec_dim()});
        st.a.middleRows(at, b.vec_dim()) = b.coeffs;
        st.b.segment(at, b.vec_dim()) = b.offset;
        st.degree += b.size;
        at += b.vec_dim();
      }
      st.c = problem.objective;
    }
    Equilibration eq = equilibrate(st, st.blocks);

    const int m = static_cast<int>(st.c.size());
    const int p = static_cast<int>(st.b.size());
    const VectorXd e = cone_identity(st);
    const double bnorm = std::max(1.0, st.b.norm());
    const double cnorm = std::max(1.0, st.c.norm());
    const double afro = std::max(1.0, st.a.norm());

    // --- Initial point: least-squares x, shifted slacks, least-norm dual. ---
    VectorXd x, s, z;
    {
      MatrixXd gram = st.a.transpose() * st.a;
      gram.diagonal().array() += 1e-12 * std::max(1.0, gram.diagonal().maxCoeff());
      Eigen::LDLT<MatrixXd> ldlt(gram);
      x = ldlt.solve(-st.a.transpose() * st.b);
      VectorXd s_raw = st.a * x + st.b;
      const double ms = cone_min_eig(st, s_raw);
      s = (ms > 1e-8 * std::max(1.0, s_raw.norm())) ? s_raw : VectorXd(s_raw + (1.0 - ms) * e);
      VectorXd z_raw = -st.a * ldlt.solve(st.c);
      const double mz = cone_min_eig(st, z_raw);
      z = (mz > 1e-8 * std::max(1.0, z_raw.norm())) ? z_raw : VectorXd(z_raw + (1.0 - mz) * e);
    }

    const double target_feas = std::min(settings.feas_tol, 1e-10);
    const double target_gap = std::min(settings.gap_tol, 1e-10);

    ConicSolution out;
    VectorXd best_x = x;
    IterateQuality best_q;
    double best_merit = std::numeric_limits<double>::infinity();
    int stall = 0;
    int iter = 0;

    for (; iter < settings.max_iterations; ++iter) {
      const VectorXd r_p = st.a * x + st.b - s;
      const VectorXd r_d = st.a.transpose() * z + st.c;
      const double gap = s.dot(z);
      const double mu = gap / st.degree;
      const double pcost = st.c.dot(x);
      const double dcost = st.b.dot(z);
      IterateQuality q;
      q.pres = r_p.norm() / bnorm;
      q.dres = r_d.norm() / cnorm;
      q.relgap = std::abs(gap) / std::max({1.0, std::abs(pcost), std::abs(dcost)});
      if (settings.verbose)
        std::fprintf(stderr, "ipm %3d pres %.2e dres %.2e gap %.2e mu %.2e\n", iter, q.pres,
                     q.dres, q.relgap, mu);
      if (q.merit() < best_merit) {
        best_merit = q.merit();
        best_q = q;
        best_x = x;
        stall = 0;
      } else if (++stall >= 10) {
        break;
      }
      if (q.pres <= target_feas && q.dres <= target_feas && q.relgap <= target_gap) break;

      // Farkas-type certificates.
      const double bz = st.b.dot(z);
      if (bz < -1e-12) {
        const VectorXd zn = z / (-bz);
        if ((st.a.transpose() * zn).norm() <= 1e-9 * afro * std::max(1.0, zn.norm())) {
          out.status = SolveStatus::Infeasible;
          out.iterations = iter;
          return out;
        }
      }
      const double xn2 = x.norm();
      if (xn2 > 1e6) {
        const VectorXd xn = x / xn2;
        if (st.c.dot(xn) > 1e-9 * cnorm &&
            cone_min_eig(st, st.a * xn) > -1e-9 * afro) {
          out.status = SolveStatus::Unbounded;
          out.iterations = iter;
          return out;
        }
      }

      const Scaling w = compute_scaling(st, s, z);
      if (!w.ok) break;

      // Scaled coefficient matrix and normal-equations factor.
      MatrixXd mw(p, m);
      for (int j = 0; j < m; ++j) mw.col(j) = apply_scaling(st, w, ScaleOp::WinvT, st.a.col(j));
      MatrixXd h = mw.transpose() * mw;
      h.diagonal().array() += 1e-13 * std::max(1.0, h.diagonal().maxCoeff());
      Eigen::LLT<MatrixXd> llt(h);
      Eigen::LDLT<MatrixXd> ldlt;
      const bool use_llt = llt.info() == Eigen::Success;
      if (!use_llt) {
        ldlt.compute(h);
        if (ldlt.info() != Eigen::Success) break;
      }
      const VectorXd wr_p = apply_scaling(st, w, ScaleOp::WinvT, r_p);

      auto kkt_solve = [&](const VectorXd& d, VectorXd& dx, VectorXd& ds, VectorXd& dz) {
        const VectorXd rhs = r_d - mw.transpose() * (wr_p + d);
        dx = use_llt ? llt.solve(rhs) : ldlt.solve(rhs);
        const VectorXd resid = rhs - h * dx;
        dx += use_llt ? llt.solve(resid) : ldlt.solve(resid);
        ds = st.a * dx + r_p;
        dz = -apply_scaling(st, w, ScaleOp::Winv,
                            VectorXd(d + apply_scaling(st, w, ScaleOp::WinvT, ds)));
      };

      // Affine (predictor) direction: d = lambda.
      VectorXd d_aff(p);
      for (size_t k = 0; k < st.blocks.size(); ++k) {
        const auto& blk = st.blocks[k];
        if (blk.cone == Cone::Nonnegative) {
          d_aff.segment(blk.offset, blk.vdim) = w.orthant_lam[k];
        } else {
          d_aff.segment(blk.offset, blk.vdim) =
              svec(MatrixXd(w.psd[k].lam.asDiagonal()));
        }
      }
      VectorXd dx_a, ds_a, dz_a;
      kkt_solve(d_aff, dx_a, ds_a, dz_a);
      const double alpha_aff =
          std::min({1.0, max_step(st, s, ds_a), max_step(st, z, dz_a)});
      const double mu_aff =
          (s + alpha_aff * ds_a).dot(z + alpha_aff * dz_a) / st.degree;
      double sigma = std::clamp(mu_aff / mu, 0.0, 1.0);
      sigma = sigma * sigma * sigma;

      // Combined direction with Mehrotra correction:
      //   lambda o (W dz + W^{-T} ds) = sigma mu e - lambda o lambda - eta o theta
      const VectorXd eta = apply_scaling(st, w, ScaleOp::WinvT, ds_a);
      const VectorXd theta = apply_scaling(st, w, ScaleOp::W, dz_a);
      VectorXd d_comb(p);
      for (size_t k = 0; k < st.blocks.size(); ++k) {
        const auto& blk = st.blocks[k];
        if (blk.cone == Cone::Nonnegative) {
          const auto lam = w.orthant_lam[k].array();
          const auto ek = eta.segment(blk.offset, blk.vdim).array();
          const auto tk = theta.segment(blk.offset, blk.vdim).array();
          d_comb.segment(blk.offset, blk.vdim) = lam + (ek * tk - sigma * mu) / lam;
        } else {
          const VectorXd& lam = w.psd[k].lam;
          const MatrixXd he = smat(eta.segment(blk.offset, blk.vdim), blk.size);
          const MatrixXd ht = smat(theta.segment(blk.offset, blk.vdim), blk.size);
          MatrixXd t = 0.5 * (he * ht + ht * he);
          for (int i = 0; i < blk.size; ++i) t(i, i) += lam(i) * lam(i) - sigma * mu;
          MatrixXd dmat(blk.size, blk.size);
          for (int i = 0; i < blk.size; ++i)
            for (int j = 0; j < blk.size; ++j) dmat(i, j) = 2.0 * t(i, j) / (lam(i) + lam(j));
          d_comb.segment(blk.offset, blk.vdim) = svec(dmat);
        }
      }
      VectorXd dx, ds, dz;
      kkt_solve(d_comb, dx, ds, dz);
      const double alpha =
          std::min({1.0, 0.99 * max_step(st, s, ds), 0.99 * max_step(st, z, dz)});
      if (alpha < 1e-13) break;
      x += alpha * dx;
      s += alpha * ds;
      z += alpha * dz;
    }

    // Final residuals of the best iterate.
    {
      const VectorXd r_p = st.a * best_x + st.b;
      IterateQuality q = best_q;
      out.iterations = iter;
      VectorXd x_orig = best_x.cwiseProduct(eq.colscale);
      const double orig_mineig = original_min_eig(problem, x_orig);
      const bool feas_ok = q.pres <= settings.feas_tol && q.dres <= settings.feas_tol;
      const bool gap_ok = q.relgap <= settings.gap_tol;
      if (feas_ok && gap_ok && orig_mineig >= -1e-7) {
        out.status = SolveStatus::Optimal;
      } else if (q.pres <= 1e-6 && q.dres <= 1e-6 && q.relgap <= 1e-4 && orig_mineig >= -1e-5) {
        out.status = SolveStatus::NearOptimal;
      } else {
        out.status = SolveStatus::Failed;
        return out;
      }
      out.primal = std::move(x_orig);
      out.objective_value = problem.objective.dot(out.primal);
      (void)r_p;
    }
    return out;
  }

  // All variables were pinned by Zero cones (or there are none): check the
  // remaining cones at the single candidate point.
  static ConicSolution evaluate_fixed_point(const ConicProblem& problem) {
    using Eigen::VectorXd;
    ConicSolution out;
    const VectorXd x = VectorXd::Zero(problem.num_vars);
    const double viol = -original_min_eig(problem, x);
    if (viol > 1e-8) {
      out.status = SolveStatus::Infeasible;
      return out;
    }
    out.status = SolveStatus::Optimal;
    out.primal = x;
    out.objective_value = problem.objective.dot(x);
    return out;
  }

  // Smallest cone margin of A x + b across blocks, in original problem data.
  static double original_min_eig(const ConicProblem& problem, const Eigen::VectorXd& x) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& b : problem.blocks) {
      const Eigen::VectorXd u = b.coeffs * x + b.offset;
      if (b.cone == Cone::Zero) {
        m = std::min(m, -u.cwiseAbs().maxCoeff());
      } else if (b.cone == Cone::Nonnegative) {
        m = std::min(m, u.minCoeff());
      } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(smat(u, b.size),
                                                          Eigen::EigenvaluesOnly);
        m = std::min(m, es.eigenvalues()(0));
      }
    }
    return m;
  }
};

/// Solves with the default interior-point backend.
inline ConicSolution solve(const ConicProblem& p, const SolveSettings& s = {}) {
  static const NtIpmBackend backend;
  return backend.solve(p, s);
}

}  // namespace exitbound::conic
