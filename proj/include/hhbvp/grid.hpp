#pragma once

#include <Eigen/Core>

namespace hhbvp {

namespace detail {

/// Shape-preserving cubic interpolant (Fritsch-Carlson slope limiting).
/// Evaluation outside [x_front, x_back] extrapolates with the end segment's
/// cubic; callers keep such excursions short.
class Pchip {
 public:
  Pchip() = default;
  Pchip(Eigen::VectorXd x, Eigen::VectorXd y);

  [[nodiscard]] double operator()(double q) const;
  [[nodiscard]] const Eigen::VectorXd& abscissae() const { return x_; }

 private:
  Eigen::VectorXd x_, y_, d_;
};

}  // namespace detail

/// A function sampled on a strictly increasing grid in s = log t, s in (0, 1]
/// (so t in (1, e]). Off-grid evaluation is monotone cubic interpolation in s;
/// querying below s_min extrapolates with the first segment, which the solver
/// only does over sub-grid-spacing distances near the left end.
class GridFunction {
 public:
  /// Requires: sizes match and are >= 2, s strictly increasing, s_front > 0,
  /// s_back = 1 (within 1e-9). Throws std::invalid_argument.
  GridFunction(Eigen::VectorXd s, Eigen::VectorXd values);

  [[nodiscard]] const Eigen::VectorXd& s() const { return s_; }
  [[nodiscard]] const Eigen::VectorXd& values() const { return v_; }
  [[nodiscard]] int size() const { return static_cast<int>(s_.size()); }

  /// Value at s = log t.
  [[nodiscard]] double operator()(double s) const { return interp_(s); }
  /// Value at t itself.
  [[nodiscard]] double at_t(double t) const;

  [[nodiscard]] double sup_norm() const;
  /// Sup distance of two functions on the same grid (asserted).
  [[nodiscard]] static double sup_distance(const GridFunction& a, const GridFunction& b);

 private:
  Eigen::VectorXd s_, v_;
  detail::Pchip interp_;
};

/// The canonical solver grid: `points` values of s uniformly spaced on
/// [s_min, 1]. The left end stays away from 0 because the solution family
/// carries a (log t)^(gamma-2) term that blows up as t -> 1+.
[[nodiscard]] Eigen::VectorXd log_uniform_grid(int points, double s_min);

}  // namespace hhbvp
