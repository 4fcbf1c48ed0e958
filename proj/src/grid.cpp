#include "hhbvp/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hhbvp {

namespace detail {

namespace {

/// Three-point one-sided slope estimate for the first/last knot, clamped per
/// Fritsch-Carlson so the end segments cannot overshoot the data.
double endpoint_slope(double h0, double h1, double d0, double d1) {
  double d = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
  if (d * d0 <= 0.0) {
    d = 0.0;
  } else if (d0 * d1 < 0.0 && std::abs(d) > 3.0 * std::abs(d0)) {
    d = 3.0 * d0;
  }
  return d;
}

}  // namespace

Pchip::Pchip(Eigen::VectorXd x, Eigen::VectorXd y) : x_(std::move(x)), y_(std::move(y)) {
  const auto n = x_.size();
  if (n != y_.size()) throw std::invalid_argument("Pchip: abscissae/values size mismatch");
  if (n < 2) throw std::invalid_argument("Pchip: need at least two knots");
  for (Eigen::Index i = 1; i < n; ++i) {
    if (!(x_[i] > x_[i - 1]))
      throw std::invalid_argument("Pchip: abscissae must be strictly increasing");
  }

  d_.resize(n);
  if (n == 2) {
    d_[0] = d_[1] = (y_[1] - y_[0]) / (x_[1] - x_[0]);
    return;
  }

  Eigen::VectorXd h(n - 1), delta(n - 1);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    h[i] = x_[i + 1] - x_[i];
    delta[i] = (y_[i + 1] - y_[i]) / h[i];
  }
  for (Eigen::Index i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] * delta[i] <= 0.0) {
      d_[i] = 0.0;
    } else {
      // Weighted harmonic mean of the neighbouring secants; keeps the
      // interpolant monotone wherever the data is.
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      d_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
    }
  }
  d_[0] = endpoint_slope(h[0], h[1], delta[0], delta[1]);
  d_[n - 1] = endpoint_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
}

double Pchip::operator()(double q) const {
  if (x_.size() == 0) throw std::logic_error("Pchip: evaluating a default-constructed interpolant");
  const auto n = x_.size();
  Eigen::Index seg;
  if (q <= x_[0]) {
    seg = 0;
  } else if (q >= x_[n - 1]) {
    seg = n - 2;
  } else {
    const double* begin = x_.data();
    seg = std::upper_bound(begin, begin + n, q) - begin - 1;
  }
  const double h = x_[seg + 1] - x_[seg];
  const double t = (q - x_[seg]) / h;
  const double omt = 1.0 - t;
  const double h00 = (1.0 + 2.0 * t) * omt * omt;
  const double h10 = t * omt * omt;
  const double h01 = t * t * (3.0 - 2.0 * t);
  const double h11 = t * t * (t - 1.0);
  return h00 * y_[seg] + h * h10 * d_[seg] + h01 * y_[seg + 1] + h * h11 * d_[seg + 1];
}

}  // namespace detail

GridFunction::GridFunction(Eigen::VectorXd s, Eigen::VectorXd values)
    : s_(std::move(s)), v_(std::move(values)) {
  if (s_.size() != v_.size()) throw std::invalid_argument("GridFunction: grid/value size mismatch");
  if (s_.size() < 2) throw std::invalid_argument("GridFunction: need at least two samples");
  if (!(s_[0] > 0.0)) throw std::invalid_argument("GridFunction: grid must start above 0");
  for (Eigen::Index i = 1; i < s_.size(); ++i) {
    if (!(s_[i] > s_[i - 1]))
      throw std::invalid_argument("GridFunction: grid must be strictly increasing");
  }
  if (std::abs(s_[s_.size() - 1] - 1.0) > 1e-9)
    throw std::invalid_argument("GridFunction: grid must end at 1");
  interp_ = detail::Pchip(s_, v_);
}

double GridFunction::at_t(double t) const {
  if (!(t > 0.0)) throw std::domain_error("GridFunction::at_t: t must be positive");
  return interp_(std::log(t));
}

double GridFunction::sup_norm() const { return v_.cwiseAbs().maxCoeff(); }

double GridFunction::sup_distance(const GridFunction& a, const GridFunction& b) {
  if (a.size() != b.size() || (a.s_ - b.s_).cwiseAbs().maxCoeff() > 0.0)
    throw std::invalid_argument("GridFunction::sup_distance: grids differ");
  return (a.v_ - b.v_).cwiseAbs().maxCoeff();
}

Eigen::VectorXd log_uniform_grid(int points, double s_min) {
  if (points < 2) throw std::invalid_argument("log_uniform_grid: need at least 2 points");
  if (!(s_min > 0.0 && s_min < 1.0))
    throw std::invalid_argument("log_uniform_grid: s_min must lie in (0,1)");
  Eigen::VectorXd s(points);
  for (int i = 0; i < points; ++i) {
    s[i] = s_min + (1.0 - s_min) * static_cast<double>(i) / (points - 1);
  }
  s[points - 1] = 1.0;
  return s;
}

}  // namespace hhbvp
