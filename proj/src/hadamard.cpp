#include "hhbvp/hadamard.hpp"

#include <cmath>
#include <stdexcept>

#include "hhbvp/special.hpp"

namespace hhbvp {

namespace detail {

double delta_u(const std::function<double(double)>& fu, double u, double h) {
  if (!(h > 0.0)) throw std::domain_error("delta_u: step must be positive");
  if (!(u > 0.0 && u <= 1.0 + 1e-9))
    throw std::domain_error("delta_u: point outside (0, 1]");
  u = std::min(u, 1.0);

  if (u - 2.0 * h > 0.0 && u + 2.0 * h <= 1.0) {
    return (fu(u - 2.0 * h) - 8.0 * fu(u - h) + 8.0 * fu(u + h) - fu(u + 2.0 * h)) /
           (12.0 * h);
  }
  if (u + 4.0 * h <= 1.0) {
    return (-25.0 * fu(u) + 48.0 * fu(u + h) - 36.0 * fu(u + 2.0 * h) +
            16.0 * fu(u + 3.0 * h) - 3.0 * fu(u + 4.0 * h)) /
           (12.0 * h);
  }
  if (u - 4.0 * h > 0.0) {
    return (25.0 * fu(u) - 48.0 * fu(u - h) + 36.0 * fu(u - 2.0 * h) -
            16.0 * fu(u - 3.0 * h) + 3.0 * fu(u - 4.0 * h)) /
           (12.0 * h);
  }
  throw std::domain_error("delta_u: no stencil of this step fits inside (0, 1]");
}

double integral_u(double order, const std::function<double(double)>& fu, double u,
                  int n_quad, double left_exponent) {
  if (!(order > 0.0)) throw std::domain_error("integral_u: order must be positive");
  if (!(u > 0.0)) throw std::domain_error("integral_u: point must be positive");
  const QuadratureRule& rule =
      left_exponent == 0.0 ? cached_jacobi_rule(order - 1.0, n_quad)
                           : cached_jacobi_rule_2exp(order - 1.0, left_exponent, n_quad);
  double acc = 0.0;
  if (left_exponent == 0.0) {
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i)
      acc += rule.weights[i] * fu(rule.nodes[i] * u);
  } else {
    // The weight already carries s^sigma; divide it back out of the sample so
    // the effective integrand is smooth at s = 0.
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i)
      acc += rule.weights[i] * fu(rule.nodes[i] * u) / std::pow(rule.nodes[i], left_exponent);
  }
  return std::pow(u, order) / gamma_fn(order) * acc;
}

Eigen::VectorXd geometric_grid(int points, double v_min) {
  if (points < 2) throw std::invalid_argument("geometric_grid: need at least 2 points");
  if (!(v_min > 0.0 && v_min < 1.0))
    throw std::invalid_argument("geometric_grid: v_min must lie in (0, 1)");
  Eigen::VectorXd v(points);
  const double l0 = std::log(v_min);
  for (int i = 0; i < points; ++i) {
    v[i] = std::exp(l0 * (1.0 - static_cast<double>(i) / (points - 1)));
  }
  v[points - 1] = 1.0;
  return v;
}

namespace {

/// Step shrunk in proportion to the distance from the singular left end, so
/// the central stencil keeps its order on functions behaving like powers of u.
double scaled_step(double h_cap, double u) { return std::min(h_cap, u / 16.0); }

double delta2_u(const std::function<double(double)>& fu, double u, double h_cap) {
  auto inner = [&fu, h_cap](double w) { return delta_u(fu, w, scaled_step(h_cap, w)); };
  return delta_u(inner, u, scaled_step(h_cap, u));
}

double log_point(double t) {
  const double u = std::log(t);
  if (!(u > 0.0 && u <= 1.0 + 1e-9))
    throw std::domain_error("fractional operator: t outside (1, e]");
  return std::min(u, 1.0);
}

}  // namespace

}  // namespace detail

double hadamard_integral(double order, const RealFn& phi, double t, int n_quad) {
  if (!(order > 0.0)) throw std::domain_error("hadamard_integral: order must be positive");
  if (!(t > 1.0)) throw std::domain_error("hadamard_integral: t must exceed 1");
  auto fu = [&phi](double v) { return phi(std::exp(v)); };
  return detail::integral_u(order, fu, std::log(t), n_quad);
}

double delta_op(const RealFn& phi, double t, double h) {
  const double u = detail::log_point(t);
  auto fu = [&phi](double v) { return phi(std::exp(v)); };
  return detail::delta_u(fu, u, h);
}

double hadamard_derivative(double order, const RealFn& phi, double t, int n_quad, double h) {
  if (!(order > 0.0 && order <= 2.0))
    throw std::domain_error("hadamard_derivative: order must lie in (0, 2]");
  const double u = detail::log_point(t);
  auto fu = [&phi](double v) { return phi(std::exp(v)); };
  if (order == 2.0) return detail::delta2_u(fu, u, h);
  if (order == 1.0) return detail::delta_u(fu, u, detail::scaled_step(h, u));
  const int n = order > 1.0 ? 2 : 1;
  auto G = [&fu, order, n, n_quad](double w) {
    return detail::integral_u(n - order, fu, w, n_quad);
  };
  if (n == 1) return detail::delta_u(G, u, detail::scaled_step(h, u));
  return detail::delta2_u(G, u, h);
}

double caputo_hadamard_derivative(double order, const RealFn& phi, double t, int n_quad,
                                  double h) {
  if (!(order > 1.0 && order <= 2.0))
    throw std::domain_error("caputo_hadamard_derivative: order must lie in (1, 2]");
  const double u = detail::log_point(t);
  auto fu = [&phi](double v) { return phi(std::exp(v)); };
  if (order == 2.0) return detail::delta2_u(fu, u, h);
  auto d2 = [&fu, h](double w) { return detail::delta2_u(fu, w, h); };
  return detail::integral_u(2.0 - order, d2, u, n_quad);
}

HilferDerivative::HilferDerivative(const OrderParams& p, RealFn phi, HilferOptions opt)
    : p_(make_orders(p.alpha, p.beta)), phi_(std::move(phi)), opt_(opt) {
  if (!phi_) throw std::invalid_argument("HilferDerivative: null function");
  if (opt_.n_quad < 2 || opt_.n_quad_outer < 2)
    throw std::invalid_argument("HilferDerivative: need at least 2 quadrature nodes");
  if (opt_.fine_points < 10)
    throw std::invalid_argument("HilferDerivative: materialization grid too coarse");
  if (!(opt_.v_min > 0.0 && opt_.v_min < 1.0))
    throw std::invalid_argument("HilferDerivative: v_min must lie in (0, 1)");
  if (!(opt_.h > 0.0)) throw std::invalid_argument("HilferDerivative: step must be positive");

  inner_order_ = 2.0 - p_.gamma;
  outer_order_ = p_.gamma - p_.alpha;
  if (outer_order_ > 0.0) {
    const Eigen::VectorXd v = detail::geometric_grid(opt_.fine_points, opt_.v_min);
    Eigen::VectorXd d2(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) d2[i] = differentiated_inner(v[i]);
    stage_.emplace(v, d2);
  }
}

double HilferDerivative::differentiated_inner(double v) const {
  auto fu = [this](double w) { return phi_(std::exp(w)); };
  auto G = [this, &fu](double w) {
    return inner_order_ == 0.0 ? fu(w)
                               : detail::integral_u(inner_order_, fu, w, opt_.n_quad);
  };
  return detail::delta2_u(G, v, opt_.h);
}

double HilferDerivative::operator()(double t) const {
  const double u = detail::log_point(t);
  if (outer_order_ == 0.0) return differentiated_inner(u);
  const detail::Pchip& st = *stage_;
  auto g = [&st](double w) { return st(w); };
  return detail::integral_u(outer_order_, g, u, opt_.n_quad_outer);
}

double hilfer_hadamard_derivative(const OrderParams& p, const RealFn& phi, double t,
                                  HilferOptions opt) {
  const HilferDerivative d(p, phi, opt);
  return d(t);
}

}  // namespace hhbvp
