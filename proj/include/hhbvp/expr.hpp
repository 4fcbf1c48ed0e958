#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hhbvp::expr {

/// Syntax error: carries the byte offset into the source and a description of
/// what would have been accepted there.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t offset, std::string expected);
  [[nodiscard]] std::size_t offset() const { return offset_; }
  [[nodiscard]] const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

/// Evaluation error (log of a non-positive value, division by zero, non-finite
/// result); carries the byte offset of the offending node.
class EvalError : public std::runtime_error {
 public:
  EvalError(std::string message, std::size_t offset);
  [[nodiscard]] std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

enum class Func { log, exp, sqrt, abs, sin, cos };

/// Immutable AST node. Variables are limited to t and x; anything else is
/// rejected at parse time.
struct Expr {
  enum class Kind { number, variable, unary_minus, binary, call };

  Kind kind = Kind::number;
  std::size_t offset = 0;  // byte offset of this node's token in the source
  double number = 0.0;
  char variable = 't';
  char op = '+';  // one of + - * / ^
  Func func = Func::log;
  std::vector<std::shared_ptr<const Expr>> args;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Grammar: + - left-associative below * /, unary minus above * /,
/// ^ right-associative and above unary minus (so -2^2 = -(2^2) and
/// 2^3^2 = 2^(3^2) = 512). Whitespace is insignificant.
/// Throws ParseError; never crashes on malformed input.
[[nodiscard]] ExprPtr parse(std::string_view source);

/// Standard real evaluation. Throws EvalError on domain violations or
/// non-finite intermediates.
[[nodiscard]] double eval(const Expr& e, double t, double x);

/// Fully parenthesized rendering; parse(to_string(e)) is structurally
/// identical to e.
[[nodiscard]] std::string to_string(const Expr& e);

[[nodiscard]] bool structurally_equal(const Expr& a, const Expr& b);

}  // namespace hhbvp::expr
