#pragma once

#include "hhbvp/orders.hpp"

namespace hhbvp::oracle {

/// Exact closed forms of every operator on log-monomials phi(t) = (log t)^p,
/// used as ground truth by the test suites and the self-check command.
///
/// Independence from the numerical path is deliberate: Gamma values here come
/// from libm (lgamma/tgamma), not from the library's own gamma_fn, and no
/// quadrature or stencil is involved. A result is a single Term
/// coeff * (log t)^power; operators acting on log-monomials stay inside that
/// family, with a zero coefficient when a stage multiplies by a vanishing
/// factor (the pole-of-Gamma-in-the-denominator convention).

struct Term {
  double coeff = 0.0;
  double power = 0.0;  // meaningless when coeff == 0

  [[nodiscard]] double eval_u(double u) const;  // value at u = log t
  [[nodiscard]] double eval_t(double t) const;
};

/// Gamma via libm; throws std::domain_error at the poles (non-positive
/// integers) instead of returning an infinity.
[[nodiscard]] double gamma_ref(double x);

/// Hadamard integral of order a > 0 on (log t)^p, p > -1:
///   Gamma(p+1)/Gamma(p+1+a) * (log t)^(p+a).
[[nodiscard]] Term integral(double a, double p);

/// Hadamard derivative of order a in (0,2] on (log t)^p.
[[nodiscard]] Term hadamard_derivative(double a, double p);

/// Caputo-style derivative of order a in (1,2] on (log t)^p
/// (delta^2 first, then the complementary integral).
[[nodiscard]] Term caputo_derivative(double a, double p);

/// Two-parameter derivative on (log t)^p via the staged composition;
/// annihilates p = gamma-1 and p = gamma-2 exactly.
[[nodiscard]] Term hilfer_derivative(const OrderParams& o, double p);

/// Left-endpoint coefficient of the inversion identity: the limit as t -> 1+
/// of delta^(1-j) applied to the inner integral of order 2-gamma of
/// (log t)^p, for j in {0, 1}. Returns 0 when the limiting power is positive,
/// the finite coefficient when it is zero, and throws std::domain_error when
/// the limit diverges.
[[nodiscard]] double inversion_boundary_coeff(const OrderParams& o, double p, int j);

}  // namespace hhbvp::oracle
