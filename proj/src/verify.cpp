#include "hhbvp/verify.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hhbvp/bvp.hpp"
#include "hhbvp/certificates.hpp"
#include "hhbvp/fixed_point.hpp"
#include "hhbvp/hadamard.hpp"
#include "hhbvp/oracle.hpp"
#include "hhbvp/reference_example.hpp"

namespace hhbvp {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

std::string budget_line(double worst, double budget) {
  return "worst " + fmt(worst) + " (budget " + fmt(budget) + ")";
}

template <class Body>
SuiteResult guarded(const char* name, Body&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

/// Integral of log-monomials against the closed form, at the operator's
/// native accuracy (the rule integrates log-polynomials exactly).
SuiteResult monomial_suite() {
  constexpr double budget = 1e-10;
  double worst = 0.0;
  for (int p : {0, 1, 2, 3}) {
    const RealFn phi = [p](double tau) { return std::pow(std::log(tau), double(p)); };
    for (double a : {0.5, 1.5}) {
      const oracle::Term ref = oracle::integral(a, double(p));
      for (int k = 0; k < 20; ++k) {
        const double t = std::exp((k + 1) / 20.0);
        worst = std::max(worst, std::abs(hadamard_integral(a, phi, t) - ref.eval_t(t)));
      }
    }
  }
  return {"monomial", worst <= budget, budget_line(worst, budget)};
}

/// I^p I^q phi = I^(p+q) phi on a smooth non-monomial profile.
SuiteResult semigroup_suite() {
  constexpr double budget = 1e-8;
  const RealFn phi = [](double tau) { const double u = std::log(tau); return u * u; };
  const std::array<std::pair<double, double>, 3> orders = {
      {{0.5, 0.5}, {0.75, 0.75}, {1.0, 0.5}}};
  double worst = 0.0;
  for (const auto& [p, q] : orders) {
    const RealFn inner = [q, &phi](double tau) { return hadamard_integral(q, phi, tau); };
    for (int k = 0; k < 10; ++k) {
      const double t = std::exp((k + 1) / 10.0);
      const double composed = hadamard_integral(p, inner, t);
      const double direct = hadamard_integral(p + q, phi, t);
      worst = std::max(worst, std::abs(composed - direct));
    }
  }
  return {"semigroup", worst <= budget, budget_line(worst, budget)};
}

/// I^alpha applied to the two-parameter derivative recovers the function
/// minus its oracle-computed boundary terms. The profile mixes a plain
/// square with a kernel power so one boundary coefficient is nonzero.
SuiteResult inversion_suite() {
  constexpr double budget = 1e-5;
  double worst = 0.0;
  for (const auto& [alpha, beta] : std::array<std::pair<double, double>, 2>{
           {{1.5, 0.5}, {1.25, 0.75}}}) {
    const OrderParams o = make_orders(alpha, beta);
    const double g = o.gamma;
    const std::array<oracle::Term, 2> terms = {{{1.0, 2.0}, {0.7, g - 1.0}}};
    const RealFn phi = [terms](double tau) {
      const double u = std::log(tau);
      return terms[0].eval_u(u) + terms[1].eval_u(u);
    };
    const HilferDerivative deriv(o, phi);
    std::array<double, 2> boundary = {0.0, 0.0};
    for (int j = 0; j < 2; ++j) {
      for (const auto& term : terms)
        boundary[j] += term.coeff * oracle::inversion_boundary_coeff(o, term.power, j);
      boundary[j] /= oracle::gamma_ref(g - j);
    }
    for (int k = 0; k < 10; ++k) {
      const double u = 0.05 + 0.1 * k;
      const double lhs = hadamard_integral(
          alpha, [&deriv](double tau) { return deriv(tau); }, std::exp(u), 160);
      const double rhs = phi(std::exp(u)) - boundary[0] * std::pow(u, g - 1.0) -
                         boundary[1] * std::pow(u, g - 2.0);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return {"inversion", worst <= budget, budget_line(worst, budget)};
}

/// The two-parameter derivative collapses to the classical form at beta = 0
/// and to the differentiate-first form at beta = 1.
SuiteResult reduction_suite() {
  constexpr double budget = 1e-6;
  const RealFn phi = [](double tau) { const double u = std::log(tau); return u * u * u; };
  double worst = 0.0;
  for (double alpha : {1.5, 1.25}) {
    const HilferDerivative at0(make_orders(alpha, 0.0), phi);
    const HilferDerivative at1(make_orders(alpha, 1.0), phi);
    for (int k = 0; k < 10; ++k) {
      const double t = std::exp(0.1 + 0.85 * k / 9.0);
      worst = std::max(worst, std::abs(at0(t) - hadamard_derivative(alpha, phi, t)));
      worst = std::max(worst, std::abs(at1(t) - caputo_hadamard_derivative(alpha, phi, t)));
    }
  }
  return {"reduction", worst <= budget, budget_line(worst, budget)};
}

/// One random problem specification with a comfortably non-degenerate
/// boundary coefficient sum.
BvpSpec sample_spec(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ua(1.15, 2.0), ub(0.0, 1.0), ue(0.05, 0.95),
      un(0.0, 0.8), uz(1.2, 2.5);
  for (;;) {
    const OrderParams o = make_orders(ua(rng), ub(rng));
    const double eps = ue(rng), nu = un(rng), zeta = uz(rng);
    try {
      if (std::abs(eta_coeffs(o, eps, nu, zeta).eta_sum) < 0.2) continue;
    } catch (const DegenerateProblemError&) {
      continue;
    }
    return BvpSpec::make(o, eps, nu, zeta, [](double, double) { return 0.0; });
  }
}

RealFn random_log_poly(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uc(-1.0, 1.0);
  std::array<double, 4> c = {uc(rng), uc(rng), uc(rng), uc(rng)};
  return [c](double tau) {
    const double u = std::log(tau);
    return ((c[3] * u + c[2]) * u + c[1]) * u + c[0];
  };
}

/// Fifty random linear problems: both boundary conditions, interior residual,
/// superposition, and agreement of the two assembly code paths.
SuiteResult boundary_suite() {
  constexpr double b_point = 1e-9, b_couple = 1e-6, b_resid = 1e-4, b_super = 1e-10,
                   b_cross = 1e-11;
  std::mt19937_64 rng(20250824u);
  double w_point = 0.0, w_couple = 0.0, w_resid = 0.0, w_super = 0.0, w_cross = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const BvpSpec spec = sample_spec(rng);
    const RealFn phi1 = random_log_poly(rng);
    const RealFn phi2 = random_log_poly(rng);
    const LinearSolution sol1 = solve_linear_continuous(spec, phi1);
    const LinearSolution sol2 = solve_linear_continuous(spec, phi2);

    w_point = std::max(w_point, std::abs(sol1.boundary_value()));

    const RealFn x1 = [&sol1](double t) { return sol1(t); };
    w_couple = std::max(w_couple, std::abs(delta_op(x1, M_E) -
                                           spec.nu * delta_op(x1, spec.zeta)));

    for (double u : {0.15, 0.35, 0.55, 0.75, 0.95})
      w_resid = std::max(w_resid, std::abs(sol1.residual_at(std::exp(u))));

    const double a = 0.6, b = -0.7;
    const RealFn mix = [&phi1, &phi2, a, b](double tau) {
      return a * phi1(tau) + b * phi2(tau);
    };
    const LinearSolution sol3 = solve_linear_continuous(spec, mix);
    for (int k = 0; k <= 20; ++k) {
      const double u = 0.05 + 0.95 * k / 20.0;
      w_super = std::max(w_super, std::abs(sol3.eval_u(u) -
                                           (a * sol1.eval_u(u) + b * sol2.eval_u(u))));
    }

    for (int k = 0; k < 8; ++k) {
      const double u = 0.1 + 0.9 * k / 7.0;
      w_cross = std::max(w_cross, std::abs(sol1.eval_u(u) - sol1.eval_via_c0c1_u(u)));
    }
  }
  const bool pass = w_point <= b_point && w_couple <= b_couple && w_resid <= b_resid &&
                    w_super <= b_super && w_cross <= b_cross;
  const std::string detail = "point " + fmt(w_point) + "/" + fmt(b_point) + ", coupling " +
                             fmt(w_couple) + "/" + fmt(b_couple) + ", residual " +
                             fmt(w_resid) + "/" + fmt(b_resid) + ", superposition " +
                             fmt(w_super) + "/" + fmt(b_super) + ", assembly " +
                             fmt(w_cross) + "/" + fmt(b_cross);
  return {"boundary", pass, detail};
}

/// Sampled operator contraction ratio stays below C * Phi for the bundled
/// example and for a plain linear right-hand side.
SuiteResult contraction_suite() {
  const Eigen::VectorXd grid = log_uniform_grid(101, 1e-3);

  const BvpSpec ref = reference_example::spec();
  const double phi_ref = phi_constant(ref.orders, ref);
  const double ratio_ref = empirical_lipschitz(ref, 60, 5.0, grid, 20250824u);
  const double bound_ref = reference_example::lipschitz_C * phi_ref;

  const BvpSpec lin = BvpSpec::make(reference_example::orders(), reference_example::epsilon,
                                    reference_example::nu, reference_example::zeta,
                                    [](double, double x) { return 0.5 * x; });
  const double ratio_lin = empirical_lipschitz(lin, 60, 5.0, grid, 20250825u);
  const double bound_lin = 0.5 * phi_constant(lin.orders, lin);

  const bool pass = ratio_ref <= bound_ref + 1e-6 && ratio_lin <= bound_lin + 1e-6;
  const std::string detail = "bundled example " + fmt(ratio_ref) + " <= " + fmt(bound_ref) +
                             ", linear 0.5x " + fmt(ratio_lin) + " <= " + fmt(bound_lin);
  return {"contraction", pass, detail};
}

}  // namespace

std::vector<SuiteResult> run_verify_suites(VerifyLevel level) {
  std::vector<SuiteResult> out;
  out.push_back(guarded("monomial", monomial_suite));
  out.push_back(guarded("semigroup", semigroup_suite));
  if (level == VerifyLevel::full) {
    out.push_back(guarded("inversion", inversion_suite));
    out.push_back(guarded("reduction", reduction_suite));
    out.push_back(guarded("boundary", boundary_suite));
    out.push_back(guarded("contraction", contraction_suite));
  }
  return out;
}

}  // namespace hhbvp
