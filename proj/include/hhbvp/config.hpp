#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hhbvp/bvp.hpp"
#include "hhbvp/expr.hpp"

namespace hhbvp {

/// Configuration error; always names the offending field (and the line when
/// the error is tied to one).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string message, std::string field, int line = 0);
  [[nodiscard]] const std::string& field() const { return field_; }
  [[nodiscard]] int line() const { return line_; }

 private:
  std::string field_;
  int line_;
};

/// A fully validated problem configuration, loaded from flat key=value text
/// (one entry per line, # comments, UTF-8).
///
/// Required keys: alpha, beta, nu, zeta, epsilon, rhs.
/// Optional keys with defaults: grid_points (201), s_min (1e-3),
/// quad_nodes (32), tol (1e-10), max_iter (200).
/// Optional without defaults: lipschitz_c, bound_c1, mu.
struct ProblemConfig {
  double alpha = 0.0;
  double beta = 0.0;
  double nu = 0.0;
  double zeta = 0.0;
  double epsilon = 0.0;
  std::string rhs;
  expr::ExprPtr rhs_ast;  // parsed at load; rhs errors are ConfigErrors on "rhs"

  int grid_points = 201;
  double s_min = 1e-3;
  int quad_nodes = 32;
  double tol = 1e-10;
  int max_iter = 200;

  std::optional<double> lipschitz_c;
  std::optional<double> bound_c1;
  std::optional<double> mu;
};

/// Parses and validates; throws ConfigError with field and line labels.
[[nodiscard]] ProblemConfig parse_config(std::string_view text);
[[nodiscard]] ProblemConfig load_config(const std::string& path);

/// The validated BvpSpec (with the compiled rhs) and the evaluation grid.
[[nodiscard]] BvpSpec to_spec(const ProblemConfig& cfg);
[[nodiscard]] Eigen::VectorXd grid_of(const ProblemConfig& cfg);

}  // namespace hhbvp
