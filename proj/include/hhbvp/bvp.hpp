#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>

#include "hhbvp/grid.hpp"
#include "hhbvp/hadamard.hpp"
#include "hhbvp/orders.hpp"

namespace hhbvp {

/// Raised when the three-point problem is degenerate: the boundary-condition
/// coefficient sum eta0 + eta1 vanishes (no unique solution), or the
/// comparator's nu = 1.
class DegenerateProblemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Right-hand side f(t, x). Forcings that ignore x are just constant in the
/// second argument.
using Rhs2 = std::function<double(double, double)>;

/// The three-point boundary value problem on (1, e]:
///
///   D^{alpha,beta} x(t) + f(t, x(t)) = 0,
///   x(1+epsilon) = 0,
///   delta x(e) = nu * delta x(zeta),
///
/// with D the two-parameter Hadamard-type derivative and delta = t d/dt.
struct BvpSpec {
  OrderParams orders;
  double epsilon = 0.2;  // left boundary offset, in (0, 1)
  double nu = 0.0;       // derivative coupling, in [0, 1)
  double zeta = 1.5;     // interior coupling point, in (1, e)
  Rhs2 f;

  /// Validates ranges and non-degeneracy (|eta0 + eta1| >= 1e-12).
  /// Throws std::domain_error or DegenerateProblemError.
  [[nodiscard]] static BvpSpec make(const OrderParams& orders, double epsilon, double nu,
                                    double zeta, Rhs2 f);
};

struct EtaCoeffs {
  double eta0 = 0.0;
  double eta1 = 0.0;
  double eta_sum = 0.0;
};

/// The boundary-condition coefficients
///   eta_i = (-1)^i L^(i-1) (gamma-i-1) [1 - nu z^(gamma-i-2)],  i = 0, 1,
/// with L = log(1+epsilon) and z = log zeta. Throws DegenerateProblemError
/// when |eta0 + eta1| < 1e-12.
[[nodiscard]] EtaCoeffs eta_coeffs(const OrderParams& o, double epsilon, double nu,
                                   double zeta);
[[nodiscard]] EtaCoeffs eta_coeffs(const OrderParams& o, const BvpSpec& spec);

/// Constants assembled while solving the linear problem with a fixed forcing.
/// varepsilon is the forcing-dependent boundary constant
/// (1-gamma) L^(1-gamma) I^alpha phi(1+epsilon); c0 and c1 are the kernel
/// coefficients of the representation x = -I^alpha phi + c0 u^(gamma-1)
/// + c1 u^(gamma-2).
struct KernelConstants {
  double eta0 = 0.0, eta1 = 0.0, eta_sum = 0.0;
  double varepsilon = 0.0;
  double c0 = 0.0, c1 = 0.0;
};

/// Continuous closed-form solution of the linear problem
/// D^{alpha,beta} x + phi = 0 under the three-point boundary conditions.
/// Evaluable anywhere in (1, e], sampleable onto a grid, and equipped with a
/// pointwise residual evaluator.
class LinearSolution {
 public:
  /// Value at t via the direct solution formula.
  [[nodiscard]] double operator()(double t) const;
  /// Value at u = log t (the formulas' native variable).
  [[nodiscard]] double eval_u(double u) const;
  /// Same value assembled through the kernel coefficients c0/c1; an
  /// algebraically equal second code path kept for cross-checking.
  [[nodiscard]] double eval_via_c0c1_u(double u) const;

  /// x(1+epsilon); exactly zero by construction (the same quadrature value
  /// enters both cancelling terms).
  [[nodiscard]] double boundary_value() const { return eval_u(L_); }

  [[nodiscard]] const KernelConstants& constants() const { return k_; }
  /// The forcing phi as a function of u = log t.
  [[nodiscard]] double forcing_u(double u) const { return phi_u_(u); }

  /// Samples onto a grid of s = log t values.
  [[nodiscard]] GridFunction sample(const Eigen::VectorXd& s_grid) const;

  /// D^{alpha,beta} x(t) + phi(t) at an interior point. Evaluated through the
  /// kernel decomposition: the two kernel powers are annihilated by the
  /// derivative exactly, and the remaining piece collapses, via the semigroup
  /// and one analytic delta-reduction, to one stencil between two
  /// quadratures. This avoids differentiating the interpolated solution near
  /// its left-end singularity.
  [[nodiscard]] double residual_at(double t) const;

 private:
  friend LinearSolution solve_linear_continuous(const BvpSpec&, const RealFn&, int);

  OrderParams o_;
  double nu_ = 0.0, L_ = 0.0, z_ = 0.0;
  std::function<double(double)> phi_u_;
  int n_quad_ = 32;
  double A_ = 0.0;   // I^alpha phi at 1+epsilon
  double B_ = 0.0;   // I^(alpha-1) phi (e) - nu * I^(alpha-1) phi (zeta)
  KernelConstants k_;
};

/// Solves the linear problem for a fixed forcing phi(t).
/// Throws DegenerateProblemError when eta0 + eta1 vanishes.
[[nodiscard]] LinearSolution solve_linear_continuous(const BvpSpec& spec, const RealFn& phi,
                                                     int n_quad = 32);

/// Grid-sampled convenience form.
[[nodiscard]] GridFunction solve_linear(const BvpSpec& spec, const RealFn& phi,
                                        const Eigen::VectorXd& s_grid, int n_quad = 32);

/// Comparator problem with the Caputo-style derivative and boundary
/// conditions x(1) = 0, delta-condition at e vs zeta:
///   x(t) = -I^alpha phi(t) + (log t/(1-nu)) [I^(alpha-1) phi(e)
///          - nu I^(alpha-1) phi(zeta)].
/// Throws DegenerateProblemError if nu = 1.
[[nodiscard]] GridFunction solve_caputo_comparator(double alpha, double nu, double zeta,
                                                   const RealFn& phi,
                                                   const Eigen::VectorXd& s_grid,
                                                   int n_quad = 32);

}  // namespace hhbvp
