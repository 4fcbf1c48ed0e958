#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "hhbvp/expr.hpp"
#include "hhbvp/reference_example.hpp"

using namespace hhbvp;

namespace {

double eval_str(const std::string& src, double t = 1.0, double x = 0.0) {
  return expr::eval(*expr::parse(src), t, x);
}

}  // namespace

TEST_CASE("arithmetic follows the usual precedence and associativity") {
  CHECK(eval_str("2+3*4") == 14.0);
  CHECK(eval_str("2*3+4") == 10.0);
  CHECK(eval_str("(2+3)*4") == 20.0);
  CHECK(eval_str("10-4-3") == 3.0);     // left associative
  CHECK(eval_str("16/4/2") == 2.0);     // left associative
  CHECK(eval_str("2^3^2") == 512.0);    // right associative
  CHECK(eval_str("-2^2") == -4.0);      // unary minus binds below the power
  CHECK(eval_str("(-2)^2") == 4.0);
  CHECK(eval_str("2^-1") == 0.5);
  CHECK(eval_str("--3") == 3.0);
  CHECK(eval_str("6*-2") == -12.0);
}

TEST_CASE("numbers parse with fractions and exponents") {
  CHECK(eval_str("0.5") == 0.5);
  CHECK(eval_str("1e3") == 1000.0);
  CHECK(eval_str("2.5e-2") == 0.025);
  CHECK(eval_str("1.25E2") == 125.0);
}

TEST_CASE("variables and functions evaluate") {
  CHECK(eval_str("t", 3.0, 0.0) == 3.0);
  CHECK(eval_str("x", 0.0, -2.5) == -2.5);
  CHECK(eval_str("t*x", 3.0, 4.0) == 12.0);
  CHECK(eval_str("log(exp(2))") == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(eval_str("sqrt(9)") == 3.0);
  CHECK(eval_str("abs(0-7)") == 7.0);
  CHECK(eval_str("sin(0)") == 0.0);
  CHECK(eval_str("cos(0)") == 1.0);
}

TEST_CASE("the bundled right-hand side evaluates exactly") {
  const expr::ExprPtr ast = expr::parse(reference_example::rhs_text());
  CHECK(expr::eval(*ast, 1.0, 2.0) == 0.015625);
  // Agreement with the compiled-in closed form at scattered points.
  const Rhs2 f = reference_example::rhs();
  for (double t : {1.1, 1.7, 2.5}) {
    for (double xv : {-3.0, 0.0, 0.4}) {
      CHECK(expr::eval(*ast, t, xv) == doctest::Approx(f(t, xv)).epsilon(1e-15));
    }
  }
}

TEST_CASE("syntax errors carry offsets and expectations") {
  CHECK_THROWS_AS((void)expr::parse(""), expr::ParseError);
  CHECK_THROWS_AS((void)expr::parse("2+"), expr::ParseError);
  CHECK_THROWS_AS((void)expr::parse("(2"), expr::ParseError);
  CHECK_THROWS_AS((void)expr::parse("2)"), expr::ParseError);
  CHECK_THROWS_AS((void)expr::parse("2 3"), expr::ParseError);
  CHECK_THROWS_AS((void)expr::parse("*3"), expr::ParseError);
  CHECK_THROWS_AS((void)expr::parse("foo(2)"), expr::ParseError);
  CHECK_THROWS_AS((void)expr::parse("log 2"), expr::ParseError);
  CHECK_THROWS_AS((void)expr::parse("log(2,3)"), expr::ParseError);

  try {
    (void)expr::parse("1+*2");
    FAIL("expected a parse error");
  } catch (const expr::ParseError& e) {
    CHECK(e.offset() == 2);
    CHECK_FALSE(e.expected().empty());
    CHECK(std::string(e.what()).find("offset 2") != std::string::npos);
  }
}

TEST_CASE("evaluation errors name the offending node") {
  CHECK_THROWS_AS((void)eval_str("1/0"), expr::EvalError);
  CHECK_THROWS_AS((void)eval_str("log(0)"), expr::EvalError);
  CHECK_THROWS_AS((void)eval_str("log(0-1)"), expr::EvalError);
  CHECK_THROWS_AS((void)eval_str("sqrt(0-4)"), expr::EvalError);
  CHECK_THROWS_AS((void)eval_str("x/t", 0.0, 1.0), expr::EvalError);
  try {
    (void)eval_str("2+1/0");
    FAIL("expected an evaluation error");
  } catch (const expr::EvalError& e) {
    CHECK(e.offset() == 3);
  }
}

TEST_CASE("rendering round-trips structurally") {
  for (const char* src : {"2+3*4", "-2^2", "log(t)*sqrt(x)+1e-3", "abs(x)/(2+abs(x))",
                          reference_example::rhs_text()}) {
    const expr::ExprPtr a = expr::parse(src);
    const expr::ExprPtr b = expr::parse(expr::to_string(*a));
    CHECK(expr::structurally_equal(*a, *b));
  }
  const expr::ExprPtr p = expr::parse("1+2");
  const expr::ExprPtr q = expr::parse("2+1");
  CHECK_FALSE(expr::structurally_equal(*p, *q));
}

TEST_CASE("random garbage produces structured errors, never crashes") {
  std::mt19937_64 rng(123u);
  const std::string charset = "tx0123456789.+-*/^()logsqrtabsincoe ,";
  std::uniform_int_distribution<int> len(0, 24);
  std::uniform_int_distribution<std::size_t> pick(0, charset.size() - 1);
  int parsed = 0, rejected = 0;
  for (int i = 0; i < 300; ++i) {
    std::string s;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) s.push_back(charset[pick(rng)]);
    try {
      const expr::ExprPtr ast = expr::parse(s);
      ++parsed;
      try {
        (void)expr::eval(*ast, 1.5, 0.5);
      } catch (const expr::EvalError&) {
      }
    } catch (const expr::ParseError&) {
      ++rejected;
    }
  }
  CHECK(parsed + rejected == 300);
  CHECK(parsed > 0);
  CHECK(rejected > 0);
}
