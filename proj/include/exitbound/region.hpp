#pragma once

#include <Eigen/Dense>
#include <optional>
#include <utility>
#include <vector>

#include "exitbound/errors.hpp"
#include "exitbound/quadratic.hpp"

namespace exitbound {

/// Closed set { x : V(x) <= 0 } for a convex quadratic V. "Ellipsoid" in the
/// broad sense: possibly degenerate or unbounded (slabs, half-space pairs).
/// Interior nonemptiness is certified lazily through an optional witness
/// point with V(witness) < 0.
class Ellipsoid {
 public:
  explicit Ellipsoid(QuadraticFunction fn, std::optional<VectorXd> interior_witness = {})
      : fn_(std::move(fn)), witness_(std::move(interior_witness)) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(fn_.q(), Eigen::EigenvaluesOnly);
    const double scale = std::max(1.0, fn_.q().cwiseAbs().maxCoeff());
    if (es.eigenvalues()(0) < -1e-9 * scale)
      throw ConfigError("Ellipsoid: defining quadratic is not convex");
    if (witness_ && !(fn_(*witness_) < 0))
      throw ConfigError("Ellipsoid: witness point is not in the interior");
  }

  const QuadraticFunction& fn() const { return fn_; }
  int dim() const { return fn_.dim(); }
  const std::optional<VectorXd>& interior_witness() const { return witness_; }

 private:
  QuadraticFunction fn_;
  std::optional<VectorXd> witness_;
};

/// One member of the convex-hull outer description: an ellipsoid or a
/// singleton point p (kept as the quadratic ||x-p||^2 whose 0-sublevel
/// set is {p}).
class EnclosureItem {
 public:
  static EnclosureItem ellipsoid(QuadraticFunction fn) {
    return EnclosureItem(std::move(fn), std::nullopt);
  }
  static EnclosureItem point(VectorXd p) {
    QuadraticFunction fn = QuadraticFunction::point_indicator(p);
    return EnclosureItem(std::move(fn), std::move(p));
  }

  const QuadraticFunction& quadratic() const { return fn_; }
  bool is_point() const { return point_.has_value(); }
  const std::optional<VectorXd>& point_value() const { return point_; }
  int dim() const { return fn_.dim(); }

 private:
  EnclosureItem(QuadraticFunction fn, std::optional<VectorXd> p)
      : fn_(std::move(fn)), point_(std::move(p)) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(fn_.q(), Eigen::EigenvaluesOnly);
    const double scale = std::max(1.0, fn_.q().cwiseAbs().maxCoeff());
    if (es.eigenvalues()(0) < -1e-9 * scale)
      throw ConfigError("EnclosureItem: quadratic is not convex");
  }

  QuadraticFunction fn_;
  std::optional<VectorXd> point_;
};

enum class OriginLocation { Interior, Exterior, Boundary };
enum class EnclosureMode { Ball, Vertices };

/// R = intersection of the inner ellipsoids E_1..E_N, together with an outer
/// description R subseteq conv{F_1..F_M}. Enclosure validity for general
/// inputs is the caller's responsibility; the box constructor guarantees it.
class Region {
 public:
  Region(std::vector<Ellipsoid> inner, std::vector<EnclosureItem> enclosure)
      : inner_(std::move(inner)), enclosure_(std::move(enclosure)) {
    if (inner_.empty() || enclosure_.empty())
      throw ConfigError("Region: need at least one inner ellipsoid and one enclosure item");
    dim_ = inner_.front().dim();
    for (const auto& e : inner_)
      if (e.dim() != dim_) throw ConfigError("Region: mixed dimensions");
    for (const auto& f : enclosure_)
      if (f.dim() != dim_) throw ConfigError("Region: mixed dimensions");
  }

  int dim() const { return dim_; }
  const std::vector<Ellipsoid>& inner() const { return inner_; }
  const std::vector<EnclosureItem>& enclosure() const { return enclosure_; }

  bool contains(const VectorXd& x, double tol) const {
    if (x.size() != dim_) throw ConfigError("Region::contains: dimension mismatch");
    for (const auto& e : inner_)
      if (e.fn()(x) > tol) return false;
    return true;
  }

  /// max_i E_i(x) and the attaining index; negative inside, positive outside.
  std::pair<double, int> boundary_gap(const VectorXd& x) const {
    double best = -std::numeric_limits<double>::infinity();
    int idx = 0;
    for (size_t i = 0; i < inner_.size(); ++i) {
      const double v = inner_[i].fn()(x);
      if (v > best) {
        best = v;
        idx = static_cast<int>(i);
      }
    }
    return {best, idx};
  }

  OriginLocation classify_origin(double tol = 1e-9) const {
    const VectorXd origin = VectorXd::Zero(dim_);
    bool all_strict = true;
    for (const auto& e : inner_) {
      const double v = e.fn()(origin);
      if (v > tol) return OriginLocation::Exterior;
      if (!(v < -tol)) all_strict = false;
    }
    return all_strict ? OriginLocation::Interior : OriginLocation::Boundary;
  }

  Region translate(const VectorXd& shift) const {
    std::vector<Ellipsoid> inner;
    inner.reserve(inner_.size());
    for (const auto& e : inner_) {
      std::optional<VectorXd> w = e.interior_witness();
      if (w) *w -= shift;
      inner.emplace_back(e.fn().translate(shift), std::move(w));
    }
    std::vector<EnclosureItem> enc;
    enc.reserve(enclosure_.size());
    for (const auto& f : enclosure_) {
      if (f.is_point())
        enc.push_back(EnclosureItem::point(*f.point_value() - shift));
      else
        enc.push_back(EnclosureItem::ellipsoid(f.quadratic().translate(shift)));
    }
    return Region(std::move(inner), std::move(enc));
  }

 private:
  std::vector<Ellipsoid> inner_;
  std::vector<EnclosureItem> enclosure_;
  int dim_ = 0;
};

/// Axis-aligned box as n per-coordinate slab quadratics, with either the
/// smallest enclosing ball (M = 1) or the 2^n vertex singletons as the
/// outer description.
inline Region box_region(const VectorXd& lo, const VectorXd& hi,
                         EnclosureMode mode = EnclosureMode::Ball) {
  const auto n = lo.size();
  if (hi.size() != n || n < 1) throw ConfigError("box_region: bad bounds");
  for (Eigen::Index i = 0; i < n; ++i)
    if (!(lo(i) < hi(i))) throw ConfigError("box_region: need lo < hi componentwise");
  const VectorXd center = 0.5 * (lo + hi);
  std::vector<Ellipsoid> inner;
  inner.reserve(static_cast<size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    inner.emplace_back(QuadraticFunction::slab(static_cast<int>(n), static_cast<int>(i), lo(i), hi(i)),
                       center);
  std::vector<EnclosureItem> enc;
  if (mode == EnclosureMode::Ball) {
    enc.push_back(EnclosureItem::ellipsoid(QuadraticFunction::ball(center, 0.5 * (hi - lo).norm())));
  } else {
    if (n > 12) throw ConfigError("box_region: vertex enclosure supported only for n <= 12");
    for (long mask = 0; mask < (1L << n); ++mask) {
      VectorXd v(n);
      for (Eigen::Index i = 0; i < n; ++i) v(i) = (mask >> i) & 1 ? hi(i) : lo(i);
      enc.push_back(EnclosureItem::point(std::move(v)));
    }
  }
  return Region(std::move(inner), std::move(enc));
}

struct ReducedAffine {
  MatrixXd a;
  Region region;
  VectorXd equilibrium;  // xbar = -A^{-1} b; x_affine(t) = xbar + x_linear(t)
};

/// Translates xdot = A x + b with region R around the equilibrium
/// xbar = -A^{-1} b, yielding the linear system ydot = A y with the
/// translated region. Trajectories satisfy
/// xi_affine(t, x0) = xi_linear(t, x0 - xbar) + xbar.
inline ReducedAffine reduce_affine(const MatrixXd& a, const VectorXd& b_aff, const Region& r) {
  linalg::require_square(a, "reduce_affine");
  if (b_aff.size() != a.rows() || r.dim() != a.rows())
    throw ConfigError("reduce_affine: dimension mismatch");
  Eigen::FullPivLU<MatrixXd> lu(a);
  if (!lu.isInvertible()) throw ConfigError("reduce_affine: A is singular");
  VectorXd xbar = lu.solve(-b_aff);
  return ReducedAffine{a, r.translate(xbar), std::move(xbar)};
}

}  // namespace exitbound
