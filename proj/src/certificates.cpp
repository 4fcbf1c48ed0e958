#include "hhbvp/certificates.hpp"

#include <cmath>
#include <limits>

#include "hhbvp/reference_example.hpp"
#include "hhbvp/special.hpp"

namespace hhbvp {

double phi_constant(const OrderParams& o, double epsilon, double nu, double zeta) {
  const OrderParams v = make_orders(o.alpha, o.beta);
  if (!(epsilon > 0.0)) throw std::domain_error("phi_constant: epsilon must be positive");
  if (!(zeta > 1.0)) throw std::domain_error("phi_constant: zeta must exceed 1");
  const EtaCoeffs eta = eta_coeffs(v, epsilon, nu, zeta);

  const double L = std::log1p(epsilon);
  const double z = std::log(zeta);
  const double a = v.alpha;
  const double g = v.gamma;
  const double lp = std::pow(L, 1.0 - g + a);

  const double term1 = (1.0 + lp) / gamma_fn(a + 1.0);
  const double bracket = 1.0 + nu * std::pow(z, a - 1.0) +
                         ((1.0 - g) * lp / a) * (1.0 - nu * std::pow(z, g - 2.0));
  const double term2 = (1.0 - L) / (L * gamma_fn(a) * eta.eta_sum) * bracket;
  return term1 + term2;
}

double phi_constant(const OrderParams& o, const BvpSpec& spec) {
  return phi_constant(o, spec.epsilon, spec.nu, spec.zeta);
}

ExistenceBounds existence_bounds(const OrderParams& o, const BvpSpec& spec, double C1) {
  if (!(C1 >= 0.0)) throw std::domain_error("existence_bounds: C1 must be non-negative");
  const OrderParams v = make_orders(o.alpha, o.beta);
  const EtaCoeffs eta = eta_coeffs(v, spec.epsilon, spec.nu, spec.zeta);
  const double phi = phi_constant(v, spec.epsilon, spec.nu, spec.zeta);

  const double L = std::log1p(spec.epsilon);
  const double z = std::log(spec.zeta);
  const double a = v.alpha;
  const double g = v.gamma;
  const double lp = std::pow(L, 1.0 - g + a);

  // The equicontinuity brace: same structure as the contraction factor but
  // with the modulus-of-continuity prefactor on the coupling term.
  const double coupling = ((g - 1.0) * (1.0 - L) + L) / (L * eta.eta_sum);
  const double inner = (1.0 + spec.nu * std::pow(z, a - 1.0)) / gamma_fn(a) +
                       (1.0 - g) * lp * (1.0 - spec.nu * std::pow(z, g - 2.0)) /
                           gamma_fn(a + 1.0);
  const double brace =
      1.0 / gamma_fn(a) + (1.0 - g) * lp / gamma_fn(a + 1.0) + coupling * inner;

  ExistenceBounds b;
  b.c2 = C1 * phi;
  b.c3 = C1 * brace;
  b.m = C1 * phi;
  return b;
}

Certificate check_theorems(const OrderParams& o, const BvpSpec& spec,
                           std::optional<double> lipschitz_C, std::optional<double> bound_C1,
                           std::optional<double> mu) {
  Certificate cert;
  cert.phi = phi_constant(o, spec);
  cert.lipschitz_C = lipschitz_C;
  cert.bound_C1 = bound_C1;
  cert.mu = mu;
  if (bound_C1) {
    const ExistenceBounds b = existence_bounds(o, spec, *bound_C1);
    cert.c2 = b.c2;
    cert.c3 = b.c3;
    cert.m_bound = b.m;
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();

  Verdict contraction{VerdictStatus::not_evaluable, nan};
  if (lipschitz_C) {
    contraction.value = *lipschitz_C * cert.phi;
    contraction.status =
        contraction.value < 1.0 ? VerdictStatus::holds : VerdictStatus::fails;
  }
  cert.verdicts[TheoremCheck::contraction_unique] = contraction;

  Verdict bounded{VerdictStatus::not_evaluable, nan};
  if (bound_C1) {
    bounded.value = *bound_C1;
    bounded.status =
        std::isfinite(*bound_C1) ? VerdictStatus::holds : VerdictStatus::fails;
  }
  cert.verdicts[TheoremCheck::bounded_existence] = bounded;

  Verdict growth{VerdictStatus::not_evaluable, nan};
  if (mu) {
    growth.value = *mu * cert.phi;
    growth.status = (*mu > 0.0 && growth.value < 1.0) ? VerdictStatus::holds
                                                      : VerdictStatus::fails;
  }
  cert.verdicts[TheoremCheck::linear_growth] = growth;

  return cert;
}

ReferenceComparison compare_reference_phi(double computed_phi) {
  ReferenceComparison c;
  c.computed_phi = computed_phi;
  c.reference_phi = reference_example::published_phi;
  c.tolerance = reference_example::phi_tolerance;
  c.discrepancy = !(std::abs(computed_phi - c.reference_phi) <= c.tolerance);
  return c;
}

double estimate_lipschitz_grid(const Rhs2& f, double radius, int t_samples, int x_samples) {
  if (!f) throw std::invalid_argument("estimate_lipschitz_grid: null function");
  if (!(radius > 0.0))
    throw std::domain_error("estimate_lipschitz_grid: radius must be positive");
  if (t_samples < 1 || x_samples < 2)
    throw std::invalid_argument("estimate_lipschitz_grid: lattice too small");

  double best = 0.0;
  for (int k = 0; k < t_samples; ++k) {
    const double s = static_cast<double>(k + 1) / t_samples;  // in (0, 1]
    const double t = std::exp(s);
    double x_prev = -radius;
    double f_prev = f(t, x_prev);
    for (int j = 1; j < x_samples; ++j) {
      const double x = -radius + 2.0 * radius * j / (x_samples - 1);
      const double fx = f(t, x);
      best = std::max(best, std::abs(fx - f_prev) / (x - x_prev));
      x_prev = x;
      f_prev = fx;
    }
  }
  return best;
}

const char* to_string(TheoremCheck c) {
  switch (c) {
    case TheoremCheck::contraction_unique: return "contraction_unique";
    case TheoremCheck::bounded_existence: return "bounded_existence";
    case TheoremCheck::linear_growth: return "linear_growth";
  }
  return "unknown";
}

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::holds: return "holds";
    case VerdictStatus::fails: return "fails";
    case VerdictStatus::not_evaluable: return "not-evaluable";
  }
  return "unknown";
}

}  // namespace hhbvp
