#include "hhbvp/special.hpp"

#include <Eigen/Eigenvalues>

#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace hhbvp {

namespace {

std::atomic<double> g_gamma_perturb{0.0};

// Lanczos approximation, g = 7, 9 coefficients. Valid for re(x) > 0.5;
// smaller positive arguments go through the reflection formula.
double lanczos_gamma(double x) {
  static constexpr double coeff[9] = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) {
    // Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return M_PI / (std::sin(M_PI * x) * lanczos_gamma(1.0 - x));
  }
  const double z = x - 1.0;
  double acc = coeff[0];
  for (int i = 1; i < 9; ++i) acc += coeff[i] / (z + i);
  const double t = z + 7.5;
  return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

// Monic-recurrence coefficients for the Jacobi weight (1-y)^a (1+y)^b on
// (-1, 1): diagonal alpha_k and off-diagonal beta_k of the tridiagonal
// Jacobi matrix (off-diagonal entries are sqrt(beta_k)).
double jacobi_diag(double a, double b, int k) {
  const double ab = a + b;
  if (k == 0) return (b - a) / (ab + 2.0);
  const double d = 2.0 * k + ab;
  return (b * b - a * a) / (d * (d + 2.0));
}

double jacobi_offdiag_sq(double a, double b, int k) {
  // k >= 1. The k = 1 case is written with the (k+a+b) factor cancelled so
  // a + b = -1 does not divide by zero.
  const double ab = a + b;
  if (k == 1) {
    return 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
  }
  const double d = 2.0 * k + ab;
  return 4.0 * k * (k + a) * (k + b) * (k + ab) / (d * d * (d + 1.0) * (d - 1.0));
}

QuadratureRule build_general(double mu, double sigma, int n) {
  if (!(mu > -1.0)) throw std::domain_error("build_jacobi_rule: weight exponent must be > -1");
  if (!(sigma > -1.0))
    throw std::domain_error("build_jacobi_rule: left weight exponent must be > -1");
  if (n < 2) throw std::domain_error("build_jacobi_rule: need at least 2 nodes");

  // Map (0,1) with weight (1-s)^mu s^sigma to (-1,1) with (1-y)^a (1+y)^b,
  // a = mu, b = sigma, via s = (1+y)/2.
  const double a = mu, b = sigma;
  Eigen::VectorXd diag(n), offdiag(n - 1);
  for (int k = 0; k < n; ++k) diag[k] = jacobi_diag(a, b, k);
  for (int k = 1; k < n; ++k) offdiag[k - 1] = std::sqrt(jacobi_offdiag_sq(a, b, k));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, offdiag, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("build_jacobi_rule: tridiagonal eigensolver did not converge");

  // Mapped weights are Beta(mu+1, sigma+1) times the squared first eigenvector
  // components; the 2^(a+b+1) moment factor cancels against the change of
  // variables.
  const double beta_mass = gamma_fn(a + 1.0) * gamma_fn(b + 1.0) / gamma_fn(a + b + 2.0);

  QuadratureRule rule;
  rule.exponent = mu;
  rule.left_exponent = sigma;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = 0.5 * (1.0 + es.eigenvalues()[i]);  // ascending
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = beta_mass * v0 * v0;
  }
  return rule;
}

struct RuleCache {
  std::mutex m;
  std::map<std::tuple<double, double, int>, std::unique_ptr<const QuadratureRule>> rules;

  const QuadratureRule& get(double mu, double sigma, int n) {
    const auto key = std::make_tuple(mu, sigma, n);
    std::scoped_lock lock(m);
    auto it = rules.find(key);
    if (it == rules.end()) {
      it = rules.emplace(key, std::make_unique<const QuadratureRule>(build_general(mu, sigma, n)))
               .first;
    }
    return *it->second;
  }
};

RuleCache& cache() {
  static RuleCache c;
  return c;
}

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0)) throw std::domain_error("gamma_fn: argument must be positive");
  const double p = g_gamma_perturb.load(std::memory_order_relaxed);
  return lanczos_gamma(x) + p;
}

QuadratureRule build_jacobi_rule(double mu, int n) { return build_general(mu, 0.0, n); }

const QuadratureRule& cached_jacobi_rule(double mu, int n) { return cache().get(mu, 0.0, n); }

namespace detail {

QuadratureRule build_jacobi_rule_2exp(double mu, double sigma, int n) {
  return build_general(mu, sigma, n);
}

const QuadratureRule& cached_jacobi_rule_2exp(double mu, double sigma, int n) {
  return cache().get(mu, sigma, n);
}

void set_gamma_perturbation(double delta) {
  g_gamma_perturb.store(delta, std::memory_order_relaxed);
}

double gamma_perturbation() { return g_gamma_perturb.load(std::memory_order_relaxed); }

}  // namespace detail

}  // namespace hhbvp
