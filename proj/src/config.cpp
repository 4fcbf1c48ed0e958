#include "hhbvp/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "hhbvp/csv.hpp"

namespace hhbvp {

namespace {

std::string describe(const std::string& message, const std::string& field, int line) {
  std::string s = "config error";
  if (!field.empty()) s += " [" + field + "]";
  if (line > 0) s += " (line " + std::to_string(line) + ")";
  return s + ": " + message;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double read_double(std::string_view value, const std::string& key, int line) {
  try {
    return csv::parse_double(value);
  } catch (const std::invalid_argument&) {
    throw ConfigError("not a number: '" + std::string(value) + "'", key, line);
  }
}

int read_int(std::string_view value, const std::string& key, int line) {
  int v = 0;
  const char* first = value.data();
  const char* last = first + value.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last)
    throw ConfigError("not an integer: '" + std::string(value) + "'", key, line);
  return v;
}

void require(bool ok, const std::string& message, const std::string& key, int line) {
  if (!ok) throw ConfigError(message, key, line);
}

}  // namespace

ConfigError::ConfigError(std::string message, std::string field, int line)
    : std::runtime_error(describe(message, field, line)),
      field_(std::move(field)),
      line_(line) {}

ProblemConfig parse_config(std::string_view text) {
  ProblemConfig cfg;
  std::set<std::string> seen;
  int line_no = 0;
  int rhs_line = 0;

  std::size_t cursor = 0;
  while (cursor <= text.size()) {
    const std::size_t nl = text.find('\n', cursor);
    std::string_view raw = text.substr(
        cursor, nl == std::string_view::npos ? std::string_view::npos : nl - cursor);
    cursor = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) continue;

    const std::size_t eq = raw.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("expected key=value", std::string(raw.substr(0, raw.find(' '))),
                        line_no);
    const std::string key{trim(raw.substr(0, eq))};
    const std::string_view value = trim(raw.substr(eq + 1));
    require(!key.empty(), "empty key", "syntax", line_no);
    require(seen.insert(key).second, "duplicate key", key, line_no);

    if (key == "alpha") {
      cfg.alpha = read_double(value, key, line_no);
      require(cfg.alpha > 1.0 && cfg.alpha <= 2.0, "alpha must lie in (1, 2]", key, line_no);
    } else if (key == "beta") {
      cfg.beta = read_double(value, key, line_no);
      require(cfg.beta >= 0.0 && cfg.beta <= 1.0, "beta must lie in [0, 1]", key, line_no);
    } else if (key == "nu") {
      cfg.nu = read_double(value, key, line_no);
      require(cfg.nu >= 0.0 && cfg.nu < 1.0, "nu must lie in [0, 1)", key, line_no);
    } else if (key == "zeta") {
      cfg.zeta = read_double(value, key, line_no);
      require(cfg.zeta > 1.0 && cfg.zeta < M_E, "zeta must lie in (1, e)", key, line_no);
    } else if (key == "epsilon") {
      cfg.epsilon = read_double(value, key, line_no);
      require(cfg.epsilon > 0.0 && cfg.epsilon < 1.0, "epsilon must lie in (0, 1)", key,
              line_no);
    } else if (key == "rhs") {
      require(!value.empty(), "empty expression", key, line_no);
      cfg.rhs = std::string(value);
      rhs_line = line_no;
    } else if (key == "grid_points") {
      cfg.grid_points = read_int(value, key, line_no);
      require(cfg.grid_points >= 2, "grid_points must be >= 2", key, line_no);
    } else if (key == "s_min") {
      cfg.s_min = read_double(value, key, line_no);
      require(cfg.s_min > 0.0 && cfg.s_min < 1.0, "s_min must lie in (0, 1)", key, line_no);
    } else if (key == "quad_nodes") {
      cfg.quad_nodes = read_int(value, key, line_no);
      require(cfg.quad_nodes >= 2, "quad_nodes must be >= 2", key, line_no);
    } else if (key == "tol") {
      cfg.tol = read_double(value, key, line_no);
      require(cfg.tol > 0.0, "tol must be positive", key, line_no);
    } else if (key == "max_iter") {
      cfg.max_iter = read_int(value, key, line_no);
      require(cfg.max_iter >= 1, "max_iter must be >= 1", key, line_no);
    } else if (key == "lipschitz_c") {
      cfg.lipschitz_c = read_double(value, key, line_no);
      require(*cfg.lipschitz_c >= 0.0, "lipschitz_c must be non-negative", key, line_no);
    } else if (key == "bound_c1") {
      cfg.bound_c1 = read_double(value, key, line_no);
      require(*cfg.bound_c1 >= 0.0, "bound_c1 must be non-negative", key, line_no);
    } else if (key == "mu") {
      cfg.mu = read_double(value, key, line_no);
      require(*cfg.mu > 0.0, "mu must be positive", key, line_no);
    } else {
      throw ConfigError("unknown key", key, line_no);
    }
  }

  for (const char* name : {"alpha", "beta", "nu", "zeta", "epsilon", "rhs"}) {
    if (!seen.count(name)) throw ConfigError("missing required key", name, 0);
  }

  try {
    cfg.rhs_ast = expr::parse(cfg.rhs);
  } catch (const expr::ParseError& e) {
    throw ConfigError(e.what(), "rhs", rhs_line);
  }
  return cfg;
}

ProblemConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open file: " + path, "config", 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

BvpSpec to_spec(const ProblemConfig& cfg) {
  if (!cfg.rhs_ast) throw ConfigError("configuration has no compiled expression", "rhs", 0);
  const expr::ExprPtr ast = cfg.rhs_ast;
  Rhs2 f = [ast](double t, double x) { return expr::eval(*ast, t, x); };
  return BvpSpec::make(make_orders(cfg.alpha, cfg.beta), cfg.epsilon, cfg.nu, cfg.zeta,
                       std::move(f));
}

Eigen::VectorXd grid_of(const ProblemConfig& cfg) {
  return log_uniform_grid(cfg.grid_points, cfg.s_min);
}

}  // namespace hhbvp
