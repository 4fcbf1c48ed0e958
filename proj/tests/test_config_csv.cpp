#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "hhbvp/config.hpp"
#include "hhbvp/csv.hpp"

using namespace hhbvp;
namespace fs = std::filesystem;

namespace {

const char* kGoodConfig =
    "# bundled example, reduced grid\n"
    "alpha = 1.5\n"
    "beta = 0.5\n"
    "nu = 0.5\n"
    "zeta = 1.5   # interior point\n"
    "epsilon = 0.2\n"
    "rhs = (1/32)*(sqrt(t)+log(t))*(abs(x)/(2+abs(x)))\n"
    "grid_points = 101\n"
    "tol = 1e-9\n"
    "lipschitz_c = 0.0625\n";

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "hhbvp_config_csv_tests";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("a complete config parses with defaults and comments") {
  const ProblemConfig cfg = parse_config(kGoodConfig);
  CHECK(cfg.alpha == 1.5);
  CHECK(cfg.beta == 0.5);
  CHECK(cfg.nu == 0.5);
  CHECK(cfg.zeta == 1.5);
  CHECK(cfg.epsilon == 0.2);
  CHECK(cfg.grid_points == 101);
  CHECK(cfg.tol == 1e-9);
  CHECK(cfg.s_min == 1e-3);      // default
  CHECK(cfg.quad_nodes == 32);   // default
  CHECK(cfg.max_iter == 200);    // default
  REQUIRE(cfg.lipschitz_c.has_value());
  CHECK(*cfg.lipschitz_c == 0.0625);
  CHECK_FALSE(cfg.bound_c1.has_value());
  REQUIRE(cfg.rhs_ast != nullptr);
  CHECK(expr::eval(*cfg.rhs_ast, 1.0, 2.0) == 0.015625);

  const BvpSpec spec = to_spec(cfg);
  CHECK(spec.f(1.0, 2.0) == 0.015625);
  const Eigen::VectorXd grid = grid_of(cfg);
  REQUIRE(grid.size() == 101);
  CHECK(grid[0] == 1e-3);
  CHECK(grid[grid.size() - 1] == 1.0);
}

TEST_CASE("config errors name the field and the line") {
  const auto field_of = [](const char* text) -> std::string {
    try {
      (void)parse_config(text);
      return "<parsed>";
    } catch (const ConfigError& e) {
      return e.field();
    }
  };

  CHECK(field_of("beta = 0.5\n") == "alpha");  // first missing required key
  CHECK(field_of("alpha = 1.5\nalpha = 1.6\n") == "alpha");
  CHECK(field_of("alpha = nope\n") == "alpha");
  CHECK(field_of("alpha = 2.5\n") == "alpha");
  CHECK(field_of("speed = 9\n") == "speed");
  CHECK(field_of("just some words\n") == "just");
  CHECK(field_of("= 3\n") == "syntax");

  try {
    (void)parse_config("alpha = 1.5\nbeta = two\n");
    FAIL("expected a config error");
  } catch (const ConfigError& e) {
    CHECK(e.field() == "beta");
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("a broken rhs expression is a config error on the rhs field") {
  const char* text =
      "alpha = 1.5\nbeta = 0.5\nnu = 0.5\nzeta = 1.5\nepsilon = 0.2\nrhs = 2+*x\n";
  try {
    (void)parse_config(text);
    FAIL("expected a config error");
  } catch (const ConfigError& e) {
    CHECK(e.field() == "rhs");
    CHECK(e.line() == 6);
  }
}

TEST_CASE("range validation covers the numeric knobs") {
  const auto rejects = [](const std::string& line) {
    const std::string text = std::string(kGoodConfig) + line + "\n";
    try {
      (void)parse_config(text);
      return false;
    } catch (const ConfigError&) {
      return true;
    }
  };
  CHECK(rejects("s_min = 0"));
  CHECK(rejects("s_min = 1"));
  CHECK(rejects("quad_nodes = 1"));
  CHECK(rejects("max_iter = 0"));
  CHECK(rejects("mu = 0"));
  CHECK(rejects("bound_c1 = -2"));
  CHECK_FALSE(rejects("mu = 0.05"));
}

TEST_CASE("load_config reports unreadable paths") {
  CHECK_THROWS_AS((void)load_config("/no/such/file.conf"), ConfigError);
}

TEST_CASE("doubles format to the shortest round-trippable text") {
  CHECK(csv::format_double(0.5) == "0.5");
  CHECK(csv::format_double(1.0) == "1");
  CHECK(csv::format_double(0.1) == "0.1");
  CHECK(csv::parse_double("2.5e-3") == 0.0025);
  CHECK_THROWS_AS((void)csv::parse_double(""), std::invalid_argument);
  CHECK_THROWS_AS((void)csv::parse_double("1.5x"), std::invalid_argument);
  CHECK_THROWS_AS((void)csv::parse_double(" 1.5"), std::invalid_argument);

  std::mt19937_64 rng(2024u);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-300, 300);
  for (int i = 0; i < 1000; ++i) {
    const double v = std::ldexp(mant(rng), expo(rng));
    const std::string text = csv::format_double(v);
    const double back = csv::parse_double(text);
    std::uint64_t a, b;
    std::memcpy(&a, &v, sizeof a);
    std::memcpy(&b, &back, sizeof b);
    CHECK(a == b);  // bitwise round trip
  }
}

TEST_CASE("csv files round-trip bit for bit") {
  const fs::path dir = scratch_dir();
  const fs::path first = dir / "table.csv";
  const fs::path second = dir / "table_copy.csv";

  csv::Table table;
  table.header = {"t", "log_t", "x"};
  std::mt19937_64 rng(77u);
  std::uniform_real_distribution<double> val(-10.0, 10.0);
  for (int i = 0; i < 50; ++i) table.rows.push_back({val(rng), val(rng), val(rng)});
  table.rows.push_back({0.0, -0.0, 1e-300});
  csv::write_csv(first, table);

  const csv::Table back = csv::read_csv(first);
  REQUIRE(back.header == table.header);
  REQUIRE(back.rows.size() == table.rows.size());
  csv::write_csv(second, back);

  std::ifstream fa(first, std::ios::binary), fb(second, std::ios::binary);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(sa.str().find("t,log_t,x\n") == 0);
}

TEST_CASE("csv reading rejects malformed tables") {
  const fs::path dir = scratch_dir();
  const fs::path ragged = dir / "ragged.csv";
  std::ofstream(ragged) << "a,b\n1,2\n3\n";
  CHECK_THROWS_AS((void)csv::read_csv(ragged), std::runtime_error);

  const fs::path garbled = dir / "garbled.csv";
  std::ofstream(garbled) << "a,b\n1,zebra\n";
  CHECK_THROWS_AS((void)csv::read_csv(garbled), std::exception);

  CHECK_THROWS_AS((void)csv::read_csv(dir / "missing.csv"), std::runtime_error);
}
