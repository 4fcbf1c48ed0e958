#pragma once

#include <Eigen/Core>

namespace hhbvp {

/// Gamma function for strictly positive arguments.
///
/// Fixed-coefficient Lanczos approximation (g = 7, 9 coefficients), relative
/// error well below 1e-13 over the range this library uses (roughly (0, 10)).
/// Arguments x <= 0 are rejected: the solver never needs them, and the
/// reflection through negative axes would only hide bugs.
///
/// Throws std::domain_error for x <= 0.
[[nodiscard]] double gamma_fn(double x);

/// Gauss-Jacobi rule on (0,1) for integrals of the form
///   integral_0^1 (1-s)^mu * g(s) ds  ~  sum_i weights[i] * g(nodes[i]),
/// exact for polynomial g up to degree 2*node_count()-1.
///
/// `left_exponent` is 0 for all rules produced by build_jacobi_rule; internal
/// two-exponent rules (weight (1-s)^mu * s^sigma) record sigma there so the
/// cache can distinguish them. The weights always absorb the full weight
/// function, so integrate() is a plain weighted sum either way.
struct QuadratureRule {
  double exponent = 0.0;       // mu, the (1-s) power
  double left_exponent = 0.0;  // sigma, the s power (0 unless internal)
  Eigen::VectorXd nodes;       // strictly increasing, inside (0,1)
  Eigen::VectorXd weights;     // strictly positive

  [[nodiscard]] int node_count() const { return static_cast<int>(nodes.size()); }

  template <class F>
  [[nodiscard]] double integrate(F&& g) const {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < nodes.size(); ++i) acc += weights[i] * g(nodes[i]);
    return acc;
  }
};

/// Builds the rule by the Golub-Welsch procedure: eigen-decomposition of the
/// symmetric tridiagonal Jacobi matrix of the monic orthogonal-polynomial
/// recurrence, mapped from (-1,1) to (0,1).
///
/// Requires mu > -1 (integrable weight) and n >= 2. Throws std::domain_error
/// on bad arguments and std::runtime_error if the eigensolver fails.
[[nodiscard]] QuadratureRule build_jacobi_rule(double mu, int n);

/// Shared immutable rule, built once per (mu, n). The cache is internally
/// synchronized; returned references stay valid for the process lifetime.
[[nodiscard]] const QuadratureRule& cached_jacobi_rule(double mu, int n);

namespace detail {

/// Two-exponent variant: weight (1-s)^mu * s^sigma. Needed where an integrand
/// carries a known algebraic power at s = 0 (the differentiated stage of the
/// fractional-derivative composition); folding that power into the weight
/// restores spectral accuracy.
[[nodiscard]] QuadratureRule build_jacobi_rule_2exp(double mu, double sigma, int n);
[[nodiscard]] const QuadratureRule& cached_jacobi_rule_2exp(double mu, double sigma, int n);

/// Fault-injection hook for the self-check command: adds delta to every
/// subsequent gamma_fn result. Additive on purpose: a uniform multiplicative
/// error would cancel between the quadrature mass and the 1/Gamma prefactor
/// of the integral operator and the self-check would not see it.
/// Process-global; not for concurrent use with real computations.
void set_gamma_perturbation(double delta);
[[nodiscard]] double gamma_perturbation();

}  // namespace detail

}  // namespace hhbvp
