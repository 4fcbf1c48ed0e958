#pragma once

#include <functional>
#include <optional>

#include "hhbvp/grid.hpp"
#include "hhbvp/orders.hpp"

namespace hhbvp {

/// A real function of t on (1, e].
using RealFn = std::function<double(double)>;

/// Hadamard fractional integral of order `order` > 0:
///
///   (1/Gamma(order)) * integral_1^t (log(t/tau))^(order-1) phi(tau) dtau/tau.
///
/// Computed in log space: with u = log t and the substitution v = s*u the
/// integral becomes (u^order/Gamma(order)) * integral_0^1 (1-s)^(order-1)
/// phi(e^(s u)) ds, handled by the Gauss-Jacobi rule of exponent order-1.
/// When phi is a polynomial in log tau the rule is exact.
///
/// Throws std::domain_error if t <= 1 or order <= 0.
[[nodiscard]] double hadamard_integral(double order, const RealFn& phi, double t,
                                       int n_quad = 32);

/// The log-derivative delta(phi)(t) = t * phi'(t) = d/du phi(e^u) at u = log t,
/// by a 4th-order finite-difference stencil of step h in u: central where the
/// stencil fits inside (0, 1], one-sided 5-point at the ends.
///
/// Throws std::domain_error if no stencil fits (t outside (1, e] or h too
/// large for the available room).
[[nodiscard]] double delta_op(const RealFn& phi, double t, double h = 1e-4);

/// Hadamard fractional derivative of order in (0, 2]:
/// delta^n applied to the Hadamard integral of complementary order n - alpha,
/// with n = 2 for order in (1, 2] and n = 1 for order in (0, 1].
/// Integer order 2 short-circuits to delta^2 phi.
[[nodiscard]] double hadamard_derivative(double order, const RealFn& phi, double t,
                                         int n_quad = 32, double h = 1e-4);

/// Caputo-style variant for order in (1, 2]: the same composition with
/// delta^2 applied first, i.e. the Hadamard integral of order 2 - alpha of
/// delta^2 phi. Integer order 2 short-circuits to delta^2 phi.
[[nodiscard]] double caputo_hadamard_derivative(double order, const RealFn& phi, double t,
                                                int n_quad = 32, double h = 1e-4);

/// Tuning knobs for the two-parameter derivative composition.
///
/// The composition is: inner integral of order (2-gamma), then delta^2, then
/// outer integral of order (gamma-alpha). The differentiated middle stage is
/// materialized once on a fine geometric grid in u (from v_min to 1) and
/// interpolated, so repeated evaluations at many t cost one quadrature each.
/// The outer stage uses an enlarged node count: after differentiation the
/// integrand carries a non-polynomial power at the left endpoint, where
/// Gauss-Jacobi converges only algebraically.
struct HilferOptions {
  int n_quad = 32;        // inner-stage nodes
  int n_quad_outer = 160; // outer-stage nodes
  int fine_points = 401;  // materialization grid size
  double v_min = 1e-6;    // left end of the geometric materialization grid
  double h = 1e-4;        // delta-stencil step cap (shrunk near u = 0)
};

/// Reusable evaluator for the two-parameter (Hilfer-style) derivative
/// composed from Hadamard integrals and delta^2. Construction performs the
/// materialization; operator() is then cheap.
class HilferDerivative {
 public:
  HilferDerivative(const OrderParams& p, RealFn phi, HilferOptions opt = {});

  /// Value at t in (1, e]. Throws std::domain_error outside the domain.
  [[nodiscard]] double operator()(double t) const;

 private:
  OrderParams p_;
  RealFn phi_;
  HilferOptions opt_;
  double inner_order_ = 0.0;             // 2 - gamma (0 when beta = 1)
  double outer_order_ = 0.0;             // gamma - alpha (0 when beta = 0)
  std::optional<detail::Pchip> stage_;   // materialized delta^2(inner integral)

  [[nodiscard]] double differentiated_inner(double v) const;
};

/// One-shot convenience wrapper around HilferDerivative.
[[nodiscard]] double hilfer_hadamard_derivative(const OrderParams& p, const RealFn& phi,
                                                double t, HilferOptions opt = {});

namespace detail {

/// Fourth-order first-derivative stencil in u on a function defined for
/// u in (0, 1]. Central where possible, else one-sided; throws
/// std::domain_error when nothing fits.
[[nodiscard]] double delta_u(const std::function<double(double)>& fu, double u, double h);

/// Hadamard integral in u-space over a u-callable: used by everything
/// internal to avoid repeated exp/log round trips.
/// With left_exponent = sigma != 0, the integrand is assumed to behave like
/// v^sigma near v = 0; the power is folded into a two-exponent rule and the
/// callable is sampled divided by that power.
[[nodiscard]] double integral_u(double order, const std::function<double(double)>& fu,
                                double u, int n_quad, double left_exponent = 0.0);

/// Geometric grid of `points` values from v_min to 1 (inclusive).
[[nodiscard]] Eigen::VectorXd geometric_grid(int points, double v_min);

}  // namespace detail

}  // namespace hhbvp
