#include "hhbvp/reference_example.hpp"

#include <cmath>

namespace hhbvp::reference_example {

const char* rhs_text() { return "(1/32)*(sqrt(t)+log(t))*(abs(x)/(2+abs(x)))"; }

OrderParams orders() { return make_orders(alpha, beta); }

Rhs2 rhs() {
  return [](double t, double x) {
    return (1.0 / 32.0) * (std::sqrt(t) + std::log(t)) * (std::abs(x) / (2.0 + std::abs(x)));
  };
}

BvpSpec spec() { return BvpSpec::make(orders(), epsilon, nu, zeta, rhs()); }

bool matches(double alpha_, double beta_, double epsilon_, double nu_, double zeta_) {
  return std::abs(alpha_ - alpha) < 1e-12 && std::abs(beta_ - beta) < 1e-12 &&
         std::abs(epsilon_ - epsilon) < 1e-12 && std::abs(nu_ - nu) < 1e-12 &&
         std::abs(zeta_ - zeta) < 1e-12;
}

}  // namespace hhbvp::reference_example
