// Acceptance battery: one criterion per function, one PASS/FAIL line each,
// exit code = number of failures. Each criterion carries its own tolerance
// and, where stated, a wall-clock budget. Everything here is built directly
// on the library plus the closed-form oracle; the self-check suites in the
// library are NOT reused, so the two paths can disagree.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "hhbvp/bvp.hpp"
#include "hhbvp/certificates.hpp"
#include "hhbvp/expr.hpp"
#include "hhbvp/fixed_point.hpp"
#include "hhbvp/hadamard.hpp"
#include "hhbvp/oracle.hpp"
#include "hhbvp/reference_example.hpp"

using namespace hhbvp;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

RealFn log_power(double p) {
  return [p](double t) { return std::pow(std::log(t), p); };
}

// --- criterion 1: integrals of log-monomials against the closed form -------

Outcome monomial_integrals() {
  const auto start = Clock::now();
  double worst = 0.0;
  for (int p : {0, 1, 2, 3}) {
    for (double a : {0.5, 1.5}) {
      const oracle::Term want = oracle::integral(a, double(p));
      for (int k = 0; k < 20; ++k) {
        const double t = std::exp((k + 1) / 20.0);
        worst = std::max(worst,
                         std::abs(hadamard_integral(a, log_power(p), t) - want.eval_t(t)));
      }
    }
  }
  const double ms = ms_since(start);
  return {worst <= 1e-10 && ms < 1000.0,
          "worst " + fmt(worst) + " vs 1e-10, " + fmt(ms) + " ms vs 1000"};
}

// --- criterion 2: semigroup composition ------------------------------------

Outcome semigroup_composition() {
  const auto start = Clock::now();
  const RealFn sq = log_power(2.0);
  double worst = 0.0;
  for (const auto& pq :
       {std::pair{0.5, 0.5}, std::pair{0.75, 0.75}, std::pair{1.0, 0.5}}) {
    const double p = pq.first, q = pq.second;
    const RealFn inner = [q, &sq](double tau) { return hadamard_integral(q, sq, tau); };
    for (int k = 0; k < 10; ++k) {
      const double t = std::exp((k + 1) / 10.0);
      worst = std::max(worst, std::abs(hadamard_integral(p, inner, t) -
                                       hadamard_integral(p + q, sq, t)));
    }
  }
  const double ms = ms_since(start);
  return {worst <= 1e-8 && ms < 1000.0,
          "worst " + fmt(worst) + " vs 1e-8, " + fmt(ms) + " ms vs 1000"};
}

// --- criterion 3: inversion of the derivative against oracle boundary terms -

Outcome derivative_inversion() {
  const OrderParams o = make_orders(1.5, 0.5);
  const double g = o.gamma;
  const RealFn sq = log_power(2.0);
  const HilferDerivative deriv(o, sq);
  double b0 = oracle::inversion_boundary_coeff(o, 2.0, 0) / oracle::gamma_ref(g);
  double b1 = oracle::inversion_boundary_coeff(o, 2.0, 1) / oracle::gamma_ref(g - 1.0);
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const double u = 0.05 + 0.1 * k;
    const double lhs = hadamard_integral(
        o.alpha, [&deriv](double tau) { return deriv(tau); }, std::exp(u), 160);
    const double rhs =
        u * u - b0 * std::pow(u, g - 1.0) - b1 * std::pow(u, g - 2.0);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return {worst <= 1e-5, "worst " + fmt(worst) + " vs 1e-5"};
}

// --- criterion 4: endpoint reductions --------------------------------------

Outcome endpoint_reductions() {
  const RealFn cube = log_power(3.0);
  const double alpha = 1.5;
  const HilferDerivative at0(make_orders(alpha, 0.0), cube);
  const HilferDerivative at1(make_orders(alpha, 1.0), cube);
  double worst0 = 0.0, worst1 = 0.0;
  for (int k = 0; k < 10; ++k) {
    const double t = std::exp(0.1 + 0.85 * k / 9.0);
    worst0 = std::max(worst0, std::abs(at0(t) - hadamard_derivative(alpha, cube, t)));
    worst1 = std::max(worst1, std::abs(at1(t) - caputo_hadamard_derivative(alpha, cube, t)));
  }
  return {worst0 <= 1e-6 && worst1 <= 1e-6,
          "plain " + fmt(worst0) + ", differentiate-first " + fmt(worst1) + ", each vs 1e-6"};
}

// --- criterion 5: random linear corpus -------------------------------------

BvpSpec sample_corpus_spec(std::mt19937_64& rng) {
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

RealFn sample_log_poly(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uc(-1.0, 1.0);
  const double c0 = uc(rng), c1 = uc(rng), c2 = uc(rng), c3 = uc(rng);
  return [c0, c1, c2, c3](double tau) {
    const double u = std::log(tau);
    return ((c3 * u + c2) * u + c1) * u + c0;
  };
}

Outcome linear_corpus() {
  const auto start = Clock::now();
  std::mt19937_64 rng(424242u);
  double w_point = 0.0, w_couple = 0.0, w_resid = 0.0, w_super = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const BvpSpec spec = sample_corpus_spec(rng);
    const RealFn phi1 = sample_log_poly(rng);
    const RealFn phi2 = sample_log_poly(rng);
    const LinearSolution s1 = solve_linear_continuous(spec, phi1);
    const LinearSolution s2 = solve_linear_continuous(spec, phi2);

    w_point = std::max(w_point, std::abs(s1.boundary_value()));

    const RealFn x1 = [&s1](double t) { return s1(t); };
    w_couple = std::max(
        w_couple, std::abs(delta_op(x1, M_E) - spec.nu * delta_op(x1, spec.zeta)));

    for (double u : {0.15, 0.35, 0.55, 0.75, 0.95})
      w_resid = std::max(w_resid, std::abs(s1.residual_at(std::exp(u))));

    const RealFn mix = [&phi1, &phi2](double tau) {
      return 0.8 * phi1(tau) - 1.3 * phi2(tau);
    };
    const LinearSolution s3 = solve_linear_continuous(spec, mix);
    for (int k = 0; k <= 20; ++k) {
      const double u = 0.05 + 0.95 * k / 20.0;
      w_super = std::max(w_super, std::abs(s3.eval_u(u) - (0.8 * s1.eval_u(u) -
                                                           1.3 * s2.eval_u(u))));
    }
  }
  const double ms = ms_since(start);
  const bool pass = w_point <= 1e-9 && w_couple <= 1e-6 && w_resid <= 1e-4 &&
                    w_super <= 1e-10 && ms < 60000.0;
  return {pass, "point " + fmt(w_point) + " vs 1e-9, coupling " + fmt(w_couple) +
                    " vs 1e-6, residual " + fmt(w_resid) + " vs 1e-4, superposition " +
                    fmt(w_super) + " vs 1e-10, " + fmt(ms) + " ms vs 60000"};
}

// --- criterion 6: reference certificate and its published-value comparison --

Outcome reference_certificate() {
  const BvpSpec spec = reference_example::spec();
  const bool c_exact = reference_example::lipschitz_C == 0.0625;
  const double computed = phi_constant(spec.orders, spec);
  const ReferenceComparison rc = compare_reference_phi(computed);
  // The comparison must flag exactly what the numbers say: a disagreement
  // beyond tolerance surfaces as a structured report, not a silent fix.
  const bool mechanism_ok =
      rc.computed_phi == computed && rc.reference_phi == 1.404 && rc.tolerance == 0.01 &&
      rc.discrepancy == (std::abs(rc.computed_phi - rc.reference_phi) > rc.tolerance);
  const std::string report = "C=1/16 " + std::string(c_exact ? "ok" : "WRONG") +
                             "; computed " + fmt(rc.computed_phi) + " vs published " +
                             fmt(rc.reference_phi) + " +- " + fmt(rc.tolerance) +
                             (rc.discrepancy ? ", discrepancy reported" : ", agreement");
  return {c_exact && mechanism_ok, report};
}

// --- criterion 7: empirical contraction ratio against C * Phi ---------------

Outcome contraction_bound() {
  const Eigen::VectorXd grid = log_uniform_grid(201, 1e-3);
  struct Case {
    const char* label;
    Rhs2 f;
    double c;
  };
  const std::vector<Case> cases = {
      {"bundled", reference_example::rhs(), reference_example::lipschitz_C},
      {"0.1x", [](double, double x) { return 0.1 * x; }, 0.1},
      {"0.5x", [](double, double x) { return 0.5 * x; }, 0.5},
  };
  bool pass = true;
  std::string detail;
  for (const Case& c : cases) {
    const BvpSpec spec = BvpSpec::make(reference_example::orders(),
                                       reference_example::epsilon, reference_example::nu,
                                       reference_example::zeta, c.f);
    const double ratio = empirical_lipschitz(spec, 200, 5.0, grid, 777u);
    const double bound = c.c * phi_constant(spec.orders, spec);
    pass = pass && ratio <= bound + 1e-6;
    if (!detail.empty()) detail += ", ";
    detail += std::string(c.label) + " " + fmt(ratio) + " <= " + fmt(bound);
  }
  return {pass, detail};
}

// --- criterion 8: fixed-point iteration ------------------------------------

Outcome fixed_point_iteration() {
  const Eigen::VectorXd grid = log_uniform_grid(201, 1e-3);

  // (a) x-independent right-hand side: the first application already lands
  // on the plain linear solve; the confirming delta is exactly zero.
  const BvpSpec flat = BvpSpec::make(make_orders(1.5, 0.5), 0.2, 0.5, 1.5,
                                     [](double t, double) { return std::log(t) + 0.4; });
  const SolveReport frep =
      picard_solve(flat, GridFunction(grid, Eigen::VectorXd::Constant(grid.size(), 2.0)));
  const GridFunction direct =
      solve_linear(flat, [](double t) { return std::log(t) + 0.4; }, grid);
  const bool one_shot = frep.converged && frep.iterations <= 2 &&
                        frep.final_delta <= 1e-12 &&
                        GridFunction::sup_distance(frep.solution, direct) <= 1e-12;

  // (b) the bundled example contracts to one profile from scattered starts.
  const BvpSpec ref = reference_example::spec();
  std::mt19937_64 rng(555u);
  std::uniform_real_distribution<double> uc(-3.0, 3.0);
  std::vector<GridFunction> limits;
  bool all_converged = true;
  const double tol = 1e-10;
  for (int i = 0; i < 5; ++i) {
    const double a = uc(rng), b = uc(rng), c = uc(rng);
    Eigen::VectorXd v(grid.size());
    for (Eigen::Index k = 0; k < grid.size(); ++k)
      v[k] = a + b * grid[k] + c * std::sin(3.0 * grid[k]);
    const SolveReport rep = picard_solve(ref, GridFunction(grid, v), tol);
    all_converged = all_converged && rep.converged;
    limits.push_back(rep.solution);
  }
  double pairwise = 0.0;
  for (std::size_t i = 0; i < limits.size(); ++i)
    for (std::size_t j = i + 1; j < limits.size(); ++j)
      pairwise = std::max(pairwise, GridFunction::sup_distance(limits[i], limits[j]));

  // (c) the converged iterate is fixed under one more application.
  const SolveReport again = picard_solve(
      ref, GridFunction(grid, Eigen::VectorXd::Constant(grid.size(), 4.0)), tol);
  const double moved =
      GridFunction::sup_distance(again.solution, rho_apply(ref, again.solution));

  const bool pass =
      one_shot && all_converged && pairwise <= 1e-8 && again.converged && moved <= 2.0 * tol;
  return {pass, std::string("one-shot ") + (one_shot ? "ok" : "FAIL") + ", pairwise " +
                    fmt(pairwise) + " vs 1e-8, post-fix move " + fmt(moved) + " vs " +
                    fmt(2.0 * tol)};
}

// --- criterion 9: expression parser ----------------------------------------

Outcome expression_parser() {
  std::mt19937_64 rng(987654321u);
  const std::string charset = "tx0123456789.+-*/^()logsqrtabsincoe ,=";
  std::uniform_int_distribution<int> len(0, 31);
  std::uniform_int_distribution<int> mode(0, 2);
  std::uniform_int_distribution<std::size_t> pick(0, charset.size() - 1);
  std::uniform_int_distribution<int> printable(32, 126);

  std::size_t bytes = 0;
  int inputs = 0, crashes = 0;
  while (bytes < 1024 || inputs < 64) {
    std::string s;
    const int n = len(rng);
    const bool raw = mode(rng) == 0;
    for (int k = 0; k < n; ++k)
      s.push_back(raw ? char(printable(rng)) : charset[pick(rng)]);
    bytes += s.size();
    ++inputs;
    try {
      const expr::ExprPtr ast = expr::parse(s);
      try {
        (void)expr::eval(*ast, 1.5, 0.5);
      } catch (const expr::EvalError&) {
      }
    } catch (const expr::ParseError&) {
    } catch (...) {
      ++crashes;  // anything unstructured escaping the parser is a failure
    }
  }

  bool exact = false;
  try {
    const expr::ExprPtr ast = expr::parse(reference_example::rhs_text());
    exact = expr::eval(*ast, 1.0, 2.0) == 0.015625;
  } catch (...) {
    exact = false;
  }

  return {crashes == 0 && exact, std::to_string(inputs) + " fuzz inputs / " +
                                     std::to_string(bytes) + " bytes, " +
                                     std::to_string(crashes) +
                                     " unstructured escapes; bundled rhs at (1,2) " +
                                     (exact ? "exact" : "WRONG")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    Outcome (*run)();
  };
  const std::vector<Criterion> battery = {
      {"log-monomial integrals", monomial_integrals},
      {"integral semigroup", semigroup_composition},
      {"derivative inversion", derivative_inversion},
      {"endpoint reductions", endpoint_reductions},
      {"linear boundary corpus", linear_corpus},
      {"reference certificate", reference_certificate},
      {"empirical contraction bound", contraction_bound},
      {"fixed-point iteration", fixed_point_iteration},
      {"expression parser", expression_parser},
  };

  int failures = 0;
  for (std::size_t i = 0; i < battery.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = battery[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = ms_since(start);
    if (!o.passed) ++failures;
    std::printf("criterion %zu [%s] %s (%s; %.0f ms)\n", i + 1, battery[i].label,
                o.passed ? "PASS" : "FAIL", o.detail.c_str(), ms);
  }
  std::printf("acceptance: %zu/%zu passed\n", battery.size() - failures, battery.size());
  return failures;
}
