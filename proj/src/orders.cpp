#include "hhbvp/orders.hpp"

#include <stdexcept>

namespace hhbvp {

OrderParams make_orders(double alpha, double beta) {
  if (!(alpha > 1.0 && alpha <= 2.0))
    throw std::domain_error("make_orders: alpha must lie in (1, 2]");
  if (!(beta >= 0.0 && beta <= 1.0))
    throw std::domain_error("make_orders: beta must lie in [0, 1]");
  OrderParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.gamma = alpha + 2.0 * beta - alpha * beta;
  p.n = 2;
  return p;
}

}  // namespace hhbvp
