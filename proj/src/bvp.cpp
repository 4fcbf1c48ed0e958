#include "hhbvp/bvp.hpp"

#include <Eigen/LU>

#include <cmath>
#include <utility>

#include "hhbvp/special.hpp"

namespace hhbvp {

namespace {

void validate_bvp_ranges(double epsilon, double nu, double zeta) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::domain_error("epsilon must lie in (0, 1)");
  if (!(nu >= 0.0 && nu < 1.0)) throw std::domain_error("nu must lie in [0, 1)");
  if (!(zeta > 1.0 && zeta < M_E)) throw std::domain_error("zeta must lie in (1, e)");
}

double log_point(double t) {
  const double u = std::log(t);
  if (!(u > 0.0 && u <= 1.0 + 1e-9))
    throw std::domain_error("solution evaluation: t outside (1, e]");
  return std::min(u, 1.0);
}

}  // namespace

BvpSpec BvpSpec::make(const OrderParams& orders, double epsilon, double nu, double zeta,
                      Rhs2 f) {
  BvpSpec s;
  s.orders = make_orders(orders.alpha, orders.beta);
  validate_bvp_ranges(epsilon, nu, zeta);
  if (!f) throw std::invalid_argument("BvpSpec: null right-hand side");
  s.epsilon = epsilon;
  s.nu = nu;
  s.zeta = zeta;
  s.f = std::move(f);
  (void)eta_coeffs(s.orders, epsilon, nu, zeta);  // throws when degenerate
  return s;
}

EtaCoeffs eta_coeffs(const OrderParams& o, double epsilon, double nu, double zeta) {
  const OrderParams v = make_orders(o.alpha, o.beta);
  // Deliberately looser than the BvpSpec ranges: the coefficients themselves
  // are well defined whenever the logarithms are, and the analytic endpoint
  // checks (e.g. epsilon = e-1, where log(1+epsilon) = 1) need that room.
  if (!(epsilon > 0.0)) throw std::domain_error("eta_coeffs: epsilon must be positive");
  if (!(zeta > 1.0)) throw std::domain_error("eta_coeffs: zeta must exceed 1");
  const double L = std::log1p(epsilon);
  const double z = std::log(zeta);
  EtaCoeffs e;
  e.eta0 = (v.gamma - 1.0) * (1.0 - nu * std::pow(z, v.gamma - 2.0)) / L;
  e.eta1 = -(v.gamma - 2.0) * (1.0 - nu * std::pow(z, v.gamma - 3.0));
  e.eta_sum = e.eta0 + e.eta1;
  if (std::abs(e.eta_sum) < 1e-12)
    throw DegenerateProblemError(
        "three-point problem degenerate: boundary coefficients sum to zero");
  return e;
}

EtaCoeffs eta_coeffs(const OrderParams& o, const BvpSpec& spec) {
  return eta_coeffs(o, spec.epsilon, spec.nu, spec.zeta);
}

double LinearSolution::operator()(double t) const { return eval_u(log_point(t)); }

double LinearSolution::eval_u(double u) const {
  if (!(u > 0.0)) throw std::domain_error("LinearSolution: log t must be positive");
  const double g = o_.gamma;
  const double i_alpha = detail::integral_u(o_.alpha, phi_u_, u, n_quad_);
  // Written so that u == L cancels exactly: the same quadrature value enters
  // i_alpha and A_, pow(1, g-1) is exactly 1, and (1/L - 1/u) is exactly 0.
  const double kernel = std::pow(u / L_, g - 1.0) * A_;
  const double bracket = B_ + k_.varepsilon * (1.0 - nu_ * std::pow(z_, g - 2.0));
  const double coupling =
      (1.0 / L_ - 1.0 / u) * std::pow(u, g - 1.0) / k_.eta_sum * bracket;
  return -i_alpha + kernel + coupling;
}

double LinearSolution::eval_via_c0c1_u(double u) const {
  if (!(u > 0.0)) throw std::domain_error("LinearSolution: log t must be positive");
  const double g = o_.gamma;
  return -detail::integral_u(o_.alpha, phi_u_, u, n_quad_) +
         k_.c0 * std::pow(u, g - 1.0) + k_.c1 * std::pow(u, g - 2.0);
}

GridFunction LinearSolution::sample(const Eigen::VectorXd& s_grid) const {
  Eigen::VectorXd values(s_grid.size());
  for (Eigen::Index i = 0; i < s_grid.size(); ++i) values[i] = eval_u(s_grid[i]);
  return GridFunction(s_grid, values);
}

double LinearSolution::residual_at(double t) const {
  const double u = log_point(t);
  // The kernel powers u^(g-1), u^(g-2) are annihilated analytically, so only
  // the -I^alpha(phi) part contributes to the derivative. Its derivative
  // collapses by the semigroup law and one exact delta-reduction to
  //   I^(g-a)[ delta I^(1+a-g) phi ],
  // leaving a single stencil between two quadratures. The differentiated
  // stage behaves like v^(a-g) at the left end, which the two-exponent outer
  // rule absorbs into its weight.
  const double c = 1.0 + o_.alpha - o_.gamma;  // inner order, in (0, 1]
  auto H = [this, c](double w) { return detail::integral_u(c, phi_u_, w, n_quad_); };
  auto dH = [&H](double v) { return detail::delta_u(H, v, std::min(1e-4, v / 16.0)); };
  const double q = o_.gamma - o_.alpha;
  const double deriv =
      q == 0.0 ? dH(u) : detail::integral_u(q, dH, u, n_quad_, o_.alpha - o_.gamma);
  return phi_u_(u) - deriv;
}

LinearSolution solve_linear_continuous(const BvpSpec& spec, const RealFn& phi, int n_quad) {
  if (!phi) throw std::invalid_argument("solve_linear_continuous: null forcing");
  if (n_quad < 2) throw std::invalid_argument("solve_linear_continuous: need >= 2 nodes");

  LinearSolution sol;
  sol.o_ = make_orders(spec.orders.alpha, spec.orders.beta);
  validate_bvp_ranges(spec.epsilon, spec.nu, spec.zeta);
  sol.nu_ = spec.nu;
  sol.L_ = std::log1p(spec.epsilon);
  sol.z_ = std::log(spec.zeta);
  sol.phi_u_ = [phi](double u) { return phi(std::exp(u)); };
  sol.n_quad_ = n_quad;

  const EtaCoeffs eta = eta_coeffs(sol.o_, spec.epsilon, spec.nu, spec.zeta);
  const double g = sol.o_.gamma;
  const double a = sol.o_.alpha;
  sol.A_ = detail::integral_u(a, sol.phi_u_, sol.L_, n_quad);
  sol.B_ = detail::integral_u(a - 1.0, sol.phi_u_, 1.0, n_quad) -
           sol.nu_ * detail::integral_u(a - 1.0, sol.phi_u_, sol.z_, n_quad);

  KernelConstants k;
  k.eta0 = eta.eta0;
  k.eta1 = eta.eta1;
  k.eta_sum = eta.eta_sum;
  k.varepsilon = (1.0 - g) * std::pow(sol.L_, 1.0 - g) * sol.A_;

  // c0, c1 from imposing both boundary conditions on the kernel form
  // x = -I^alpha(phi) + c0 u^(g-1) + c1 u^(g-2); the determinant equals
  // -L^(g-1) * eta_sum, so non-degeneracy is exactly eta_sum != 0.
  Eigen::Matrix2d M;
  M << std::pow(sol.L_, g - 1.0), std::pow(sol.L_, g - 2.0),
      (g - 1.0) * (1.0 - sol.nu_ * std::pow(sol.z_, g - 2.0)),
      (g - 2.0) * (1.0 - sol.nu_ * std::pow(sol.z_, g - 3.0));
  const Eigen::Vector2d rhs(sol.A_, sol.B_);
  const Eigen::Vector2d c = M.lu().solve(rhs);
  k.c0 = c[0];
  k.c1 = c[1];
  sol.k_ = k;
  return sol;
}

GridFunction solve_linear(const BvpSpec& spec, const RealFn& phi,
                          const Eigen::VectorXd& s_grid, int n_quad) {
  return solve_linear_continuous(spec, phi, n_quad).sample(s_grid);
}

GridFunction solve_caputo_comparator(double alpha, double nu, double zeta, const RealFn& phi,
                                     const Eigen::VectorXd& s_grid, int n_quad) {
  if (!(alpha > 1.0 && alpha <= 2.0))
    throw std::domain_error("solve_caputo_comparator: alpha must lie in (1, 2]");
  if (!(zeta > 1.0 && zeta < M_E))
    throw std::domain_error("solve_caputo_comparator: zeta must lie in (1, e)");
  if (std::abs(1.0 - nu) < 1e-12)
    throw DegenerateProblemError("solve_caputo_comparator: nu = 1 is degenerate");
  if (!phi) throw std::invalid_argument("solve_caputo_comparator: null forcing");

  auto phi_u = [&phi](double u) { return phi(std::exp(u)); };
  const double z = std::log(zeta);
  const double coupling = (detail::integral_u(alpha - 1.0, phi_u, 1.0, n_quad) -
                           nu * detail::integral_u(alpha - 1.0, phi_u, z, n_quad)) /
                          (1.0 - nu);
  Eigen::VectorXd values(s_grid.size());
  for (Eigen::Index i = 0; i < s_grid.size(); ++i) {
    values[i] = -detail::integral_u(alpha, phi_u, s_grid[i], n_quad) + s_grid[i] * coupling;
  }
  return GridFunction(s_grid, values);
}

}  // namespace hhbvp
