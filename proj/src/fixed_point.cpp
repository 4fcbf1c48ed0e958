#include "hhbvp/fixed_point.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>

namespace hhbvp {

GridFunction rho_apply(const BvpSpec& spec, const GridFunction& x, int n_quad) {
  if (!spec.f) throw std::invalid_argument("rho_apply: spec has no right-hand side");
  RealFn phi = [&spec, &x](double t) { return spec.f(t, x.at_t(t)); };
  return solve_linear(spec, phi, x.s(), n_quad);
}

SolveReport picard_solve(const BvpSpec& spec, const GridFunction& x0, double tol,
                         int max_iter, int n_quad) {
  if (!spec.f) throw std::invalid_argument("picard_solve: spec has no right-hand side");
  if (!(tol > 0.0)) throw std::invalid_argument("picard_solve: tol must be positive");
  if (max_iter < 1) throw std::invalid_argument("picard_solve: max_iter must be >= 1");

  GridFunction x = x0;
  std::shared_ptr<const LinearSolution> last;
  int iterations = 0;
  double final_delta = std::numeric_limits<double>::infinity();
  bool converged = false;

  for (int k = 1; k <= max_iter; ++k) {
    // Snapshot the current iterate by value: the stored continuous solution
    // must keep evaluating the forcing it was solved with, not whatever the
    // loop variable holds later.
    RealFn phi = [f = spec.f, xs = x](double t) { return f(t, xs.at_t(t)); };
    auto step = std::make_shared<const LinearSolution>(solve_linear_continuous(spec, phi, n_quad));
    GridFunction next = step->sample(x.s());
    final_delta = GridFunction::sup_distance(next, x);
    x = std::move(next);
    last = std::move(step);
    iterations = k;
    if (final_delta <= tol) {
      converged = true;
      break;
    }
  }

  // Residual of the final iterate against its own forcing: the stored step
  // solved with f(t, x_{K-1}); swap that forcing for f(t, x_K) pointwise.
  double residual_sup = 0.0;
  const Eigen::VectorXd& s = x.s();
  for (Eigen::Index i = 1; i + 1 < s.size(); ++i) {
    const double u = s[i];
    const double t = std::exp(u);
    const double r = last->residual_at(t) - last->forcing_u(u) + spec.f(t, x(u));
    residual_sup = std::max(residual_sup, std::abs(r));
  }

  SolveReport rep{std::move(x), iterations, final_delta, residual_sup, converged,
                  last->boundary_value(), last};
  return rep;
}

double empirical_lipschitz(const BvpSpec& spec, int trials, double radius,
                           const Eigen::VectorXd& s_grid, std::uint64_t seed, int n_quad) {
  if (trials < 1) throw std::invalid_argument("empirical_lipschitz: trials must be >= 1");
  if (!(radius > 0.0))
    throw std::invalid_argument("empirical_lipschitz: radius must be positive");
  const Eigen::Index n = s_grid.size();
  if (n < 3) throw std::invalid_argument("empirical_lipschitz: grid too small");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-radius, radius);
  auto draw = [&]() {
    Eigen::VectorXd raw(n);
    for (Eigen::Index i = 0; i < n; ++i) raw[i] = uniform(rng);
    // One 3-point averaging pass; raw i.i.d. noise would make interpolation
    // error dominate the measured ratio.
    Eigen::VectorXd smooth(n);
    smooth[0] = (2.0 * raw[0] + raw[1]) / 3.0;
    for (Eigen::Index i = 1; i + 1 < n; ++i)
      smooth[i] = (raw[i - 1] + raw[i] + raw[i + 1]) / 3.0;
    smooth[n - 1] = (raw[n - 2] + 2.0 * raw[n - 1]) / 3.0;
    return GridFunction(s_grid, smooth);
  };

  double worst = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    const GridFunction x = draw();
    const GridFunction y = draw();
    const double gap = GridFunction::sup_distance(x, y);
    if (gap < 1e-10) continue;
    const double image_gap =
        GridFunction::sup_distance(rho_apply(spec, x, n_quad), rho_apply(spec, y, n_quad));
    worst = std::max(worst, image_gap / gap);
  }
  return worst;
}

}  // namespace hhbvp
