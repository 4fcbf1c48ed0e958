#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <iostream>
#include <limits>
#include <string>

#include "hhbvp/bvp.hpp"
#include "hhbvp/certificates.hpp"
#include "hhbvp/config.hpp"
#include "hhbvp/csv.hpp"
#include "hhbvp/fixed_point.hpp"
#include "hhbvp/reference_example.hpp"
#include "hhbvp/special.hpp"
#include "hhbvp/verify.hpp"

namespace fs = std::filesystem;
using namespace hhbvp;

namespace {

void print_kv(const std::string& key, double value) {
  std::cout << key << "=" << csv::format_double(value) << "\n";
}

void print_kv(const std::string& key, const std::string& value) {
  std::cout << key << "=" << value << "\n";
}

/// Creates the output directory and enforces the no-silent-overwrite rule.
/// Returns false (after printing to stderr) when the target exists and
/// --force was not given.
bool claim_output(const fs::path& target, bool force) {
  fs::create_directories(target.parent_path());
  if (fs::exists(target) && !force) {
    std::cerr << "refusing to overwrite " << target.string() << " (pass --force)\n";
    return false;
  }
  return true;
}

GridFunction zero_start(const Eigen::VectorXd& grid) {
  return GridFunction(grid, Eigen::VectorXd::Zero(grid.size()));
}

void print_verdicts(const Certificate& cert) {
  for (const auto& [check, verdict] : cert.verdicts) {
    print_kv(to_string(check), std::string(to_string(verdict.status)));
    print_kv(std::string(to_string(check)) + "_value", verdict.value);
  }
}

int run_solve(const std::string& config_path, const std::string& out_dir, bool force) {
  const ProblemConfig cfg = load_config(config_path);
  const BvpSpec spec = to_spec(cfg);
  const Eigen::VectorXd grid = grid_of(cfg);

  const SolveReport rep =
      picard_solve(spec, zero_start(grid), cfg.tol, cfg.max_iter, cfg.quad_nodes);

  const fs::path target = fs::path(out_dir) / "solution.csv";
  if (!claim_output(target, force)) return 1;
  csv::Table table;
  table.header = {"t", "log_t", "x"};
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const double s = rep.solution.s()[i];
    table.rows.push_back({std::exp(s), s, rep.solution.values()[i]});
  }
  csv::write_csv(target, table);

  print_kv("converged", std::string(rep.converged ? "yes" : "no"));
  print_kv("iterations", double(rep.iterations));
  print_kv("final_delta", rep.final_delta);
  print_kv("residual_sup", rep.residual_sup);
  print_kv("boundary_value", rep.boundary_value);
  const double phi = phi_constant(spec.orders, spec);
  print_kv("phi", phi);
  if (cfg.lipschitz_c) {
    print_kv("c_phi", *cfg.lipschitz_c * phi);
    print_kv("contraction", std::string(*cfg.lipschitz_c * phi < 1.0 ? "holds" : "fails"));
  }
  print_kv("solution_csv", target.string());
  return rep.converged ? 0 : 3;
}

int run_certify(const std::string& config_path) {
  const ProblemConfig cfg = load_config(config_path);
  const BvpSpec spec = to_spec(cfg);
  const Certificate cert =
      check_theorems(spec.orders, spec, cfg.lipschitz_c, cfg.bound_c1, cfg.mu);

  print_kv("computed_phi", cert.phi);
  if (cert.lipschitz_C) {
    print_kv("lipschitz_c", *cert.lipschitz_C);
    print_kv("c_phi", *cert.lipschitz_C * cert.phi);
  }
  if (cert.bound_C1) {
    print_kv("bound_c1", *cert.bound_C1);
    print_kv("c2", *cert.c2);
    print_kv("c3", *cert.c3);
    print_kv("m", *cert.m_bound);
  }
  if (cert.mu) {
    print_kv("mu", *cert.mu);
    print_kv("mu_phi", *cert.mu * cert.phi);
  }
  print_verdicts(cert);

  if (reference_example::matches(cfg.alpha, cfg.beta, cfg.epsilon, cfg.nu, cfg.zeta)) {
    const ReferenceComparison rc = compare_reference_phi(cert.phi);
    print_kv("reference_phi", rc.reference_phi);
    print_kv("phi_tolerance", rc.tolerance);
    print_kv("phi_difference", rc.computed_phi - rc.reference_phi);
    print_kv("discrepancy", std::string(rc.discrepancy ? "yes" : "no"));
  }
  return 0;
}

int run_verify(const std::string& level, double perturb_gamma) {
  if (perturb_gamma != 0.0) detail::set_gamma_perturbation(perturb_gamma);
  const VerifyLevel lvl = level == "full" ? VerifyLevel::full : VerifyLevel::quick;
  bool all_passed = true;
  for (const SuiteResult& r : run_verify_suites(lvl)) {
    print_kv(r.name, std::string(r.passed ? "pass" : "fail"));
    print_kv(r.name + "_detail", r.detail);
    all_passed = all_passed && r.passed;
  }
  return all_passed ? 0 : 4;
}

bool sweep_value_in_range(const std::string& param, double v) {
  if (param == "alpha") return v > 1.0 && v <= 2.0;
  if (param == "beta") return v >= 0.0 && v <= 1.0;
  if (param == "nu") return v >= 0.0 && v < 1.0;
  return v > 0.0 && v < 1.0;  // epsilon
}

int run_sweep(const std::string& config_path, const std::string& out_dir, bool force,
              const std::string& param, double from, double to, int steps) {
  const ProblemConfig base = load_config(config_path);
  if (!sweep_value_in_range(param, from) || !sweep_value_in_range(param, to)) {
    std::cerr << "sweep range [" << csv::format_double(from) << ", "
              << csv::format_double(to) << "] leaves the valid domain of " << param << "\n";
    return 1;
  }

  csv::Table table;
  table.header = {"param_value", "phi", "c_phi", "iterations", "x_at_e"};
  bool all_converged = true;
  for (int k = 0; k < steps; ++k) {
    const double v = steps == 1 ? from : from + (to - from) * k / (steps - 1);
    ProblemConfig cfg = base;
    if (param == "alpha") cfg.alpha = v;
    else if (param == "beta") cfg.beta = v;
    else if (param == "nu") cfg.nu = v;
    else cfg.epsilon = v;

    const BvpSpec spec = to_spec(cfg);
    const double phi = phi_constant(spec.orders, spec);
    const SolveReport rep = picard_solve(spec, zero_start(grid_of(cfg)), cfg.tol,
                                         cfg.max_iter, cfg.quad_nodes);
    const double c_phi = cfg.lipschitz_c ? *cfg.lipschitz_c * phi
                                         : std::numeric_limits<double>::quiet_NaN();
    table.rows.push_back({v, phi, c_phi, double(rep.iterations),
                          rep.solution.values()[rep.solution.size() - 1]});
    all_converged = all_converged && rep.converged;
  }

  const fs::path target = fs::path(out_dir) / "sweep.csv";
  if (!claim_output(target, force)) return 1;
  csv::write_csv(target, table);
  print_kv("rows", double(steps));
  print_kv("sweep_csv", target.string());
  return all_converged ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-point boundary-value solver for the two-parameter "
               "Hadamard-type fractional derivative on (1, e]"};
  app.require_subcommand(1);

  std::string config_path, out_dir = "out", level = "quick", sweep_param;
  bool force = false;
  double perturb_gamma = 0.0, sweep_from = 0.0, sweep_to = 0.0;
  int sweep_steps = 1;

  CLI::App* solve = app.add_subcommand("solve", "Solve the problem given by a config file");
  solve->add_option("config", config_path, "key=value problem description")->required();
  solve->add_option("--out", out_dir, "output directory (default ./out)");
  solve->add_flag("--force", force, "allow overwriting existing output files");

  CLI::App* certify =
      app.add_subcommand("certify", "Evaluate the existence/uniqueness certificates");
  certify->add_option("config", config_path, "key=value problem description")->required();

  CLI::App* verify = app.add_subcommand("verify", "Run the built-in self-check suites");
  verify->add_option("--level", level, "quick or full (default quick)")
      ->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--perturb-gamma", perturb_gamma,
                     "fault injection: offset every internal gamma evaluation");

  CLI::App* sweep =
      app.add_subcommand("sweep", "Solve across a range of one problem parameter");
  sweep->add_option("config", config_path, "key=value problem description")->required();
  sweep->add_option("--param", sweep_param, "alpha, beta, nu, or epsilon")
      ->required()
      ->check(CLI::IsMember({"alpha", "beta", "nu", "epsilon"}));
  sweep->add_option("--from", sweep_from, "first parameter value")->required();
  sweep->add_option("--to", sweep_to, "last parameter value")->required();
  sweep->add_option("--steps", sweep_steps, "number of values (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  sweep->add_option("--out", out_dir, "output directory (default ./out)");
  sweep->add_flag("--force", force, "allow overwriting existing output files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed()) return run_solve(config_path, out_dir, force);
    if (certify->parsed()) return run_certify(config_path);
    if (verify->parsed()) return run_verify(level, perturb_gamma);
    return run_sweep(config_path, out_dir, force, sweep_param, sweep_from, sweep_to,
                     sweep_steps);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const DegenerateProblemError& e) {
    std::cerr << "degenerate problem: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
