#include "hhbvp/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace hhbvp::oracle {

namespace {

constexpr double kKillTol = 1e-9;

/// Applies delta = d/du to coeff * u^power, with the exact-annihilation
/// convention at power = 0.
Term delta_stage(Term a) {
  if (a.coeff == 0.0) return a;
  if (std::abs(a.power) < kKillTol) return Term{0.0, 0.0};
  return Term{a.coeff * a.power, a.power - 1.0};
}

/// Applies the order-a fractional integral to coeff * u^power.
Term integral_stage(Term x, double a) {
  if (x.coeff == 0.0) return x;
  if (!(x.power > -1.0))
    throw std::domain_error("oracle: integral of a non-integrable power");
  const double c = gamma_ref(x.power + 1.0) / gamma_ref(x.power + 1.0 + a);
  return Term{x.coeff * c, x.power + a};
}

}  // namespace

double Term::eval_u(double u) const {
  if (coeff == 0.0) return 0.0;
  if (power == 0.0) return coeff;
  return coeff * std::pow(u, power);
}

double Term::eval_t(double t) const { return eval_u(std::log(t)); }

double gamma_ref(double x) {
  if (x <= 0.0 && x == std::floor(x))
    throw std::domain_error("gamma_ref: pole at a non-positive integer");
  return std::tgamma(x);
}

Term integral(double a, double p) {
  if (!(a > 0.0)) throw std::domain_error("oracle::integral: order must be positive");
  return integral_stage(Term{1.0, p}, a);
}

Term hadamard_derivative(double a, double p) {
  if (!(a > 0.0 && a <= 2.0))
    throw std::domain_error("oracle::hadamard_derivative: order must lie in (0, 2]");
  const int n = a > 1.0 ? 2 : 1;
  Term x{1.0, p};
  if (a != static_cast<double>(n)) x = integral_stage(x, n - a);
  for (int k = 0; k < n; ++k) x = delta_stage(x);
  return x;
}

Term caputo_derivative(double a, double p) {
  if (!(a > 1.0 && a <= 2.0))
    throw std::domain_error("oracle::caputo_derivative: order must lie in (1, 2]");
  Term x{1.0, p};
  x = delta_stage(delta_stage(x));
  if (a != 2.0) x = integral_stage(x, 2.0 - a);
  return x;
}

Term hilfer_derivative(const OrderParams& o, double p) {
  const OrderParams v = make_orders(o.alpha, o.beta);
  Term x{1.0, p};
  if (v.gamma != 2.0) x = integral_stage(x, 2.0 - v.gamma);
  x = delta_stage(delta_stage(x));
  const double outer = v.gamma - v.alpha;
  if (outer != 0.0) x = integral_stage(x, outer);
  return x;
}

double inversion_boundary_coeff(const OrderParams& o, double p, int j) {
  if (j != 0 && j != 1)
    throw std::domain_error("inversion_boundary_coeff: j must be 0 or 1");
  const OrderParams v = make_orders(o.alpha, o.beta);
  Term x{1.0, p};
  if (v.gamma != 2.0) x = integral_stage(x, 2.0 - v.gamma);
  if (j == 0) x = delta_stage(x);
  if (x.coeff == 0.0) return 0.0;
  if (x.power > kKillTol) return 0.0;
  if (std::abs(x.power) <= kKillTol) return x.coeff;
  throw std::domain_error("inversion_boundary_coeff: limit diverges at the left endpoint");
}

}  // namespace hhbvp::oracle
