#pragma once

namespace hhbvp {

/// The order triple of the two-parameter fractional derivative family:
/// order alpha in (1,2], type beta in [0,1], and the derived effective order
/// gamma = alpha + 2*beta - alpha*beta (always in (1,2]).
///
/// beta = 0 gives gamma = alpha (the non-Caputo composition); beta = 1 gives
/// gamma = 2 (the Caputo-style composition). Everything here is the n = 2
/// branch: two applications of the log-derivative delta = t d/dt.
struct OrderParams {
  double alpha = 1.5;
  double beta = 0.5;
  double gamma = 0.0;  // derived; use make_orders
  int n = 2;
};

/// Validates the ranges and fills in gamma. Throws std::domain_error.
[[nodiscard]] OrderParams make_orders(double alpha, double beta);

}  // namespace hhbvp
