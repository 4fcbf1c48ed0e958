#include "hhbvp/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

#include "hhbvp/csv.hpp"

namespace hhbvp::expr {

ParseError::ParseError(std::string message, std::size_t offset, std::string expected)
    : std::runtime_error(message + " at offset " + std::to_string(offset) +
                         (expected.empty() ? "" : " (expected " + expected + ")")),
      offset_(offset),
      expected_(std::move(expected)) {}

EvalError::EvalError(std::string message, std::size_t offset)
    : std::runtime_error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

namespace {

struct FuncName {
  const char* name;
  Func func;
};

constexpr std::array<FuncName, 6> kFuncs{{{"log", Func::log},
                                          {"exp", Func::exp},
                                          {"sqrt", Func::sqrt},
                                          {"abs", Func::abs},
                                          {"sin", Func::sin},
                                          {"cos", Func::cos}}};

const char* func_name(Func f) {
  for (const auto& entry : kFuncs)
    if (entry.func == f) return entry.name;
  return "?";
}

ExprPtr make_number(double v, std::size_t offset) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::number;
  e->offset = offset;
  e->number = v;
  return e;
}

ExprPtr make_variable(char v, std::size_t offset) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::variable;
  e->offset = offset;
  e->variable = v;
  return e;
}

ExprPtr make_negate(ExprPtr arg, std::size_t offset) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::unary_minus;
  e->offset = offset;
  e->args = {std::move(arg)};
  return e;
}

ExprPtr make_binary(char op, ExprPtr lhs, ExprPtr rhs, std::size_t offset) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::binary;
  e->offset = offset;
  e->op = op;
  e->args = {std::move(lhs), std::move(rhs)};
  return e;
}

ExprPtr make_call(Func f, ExprPtr arg, std::size_t offset) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::call;
  e->offset = offset;
  e->func = f;
  e->args = {std::move(arg)};
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ExprPtr run() {
    skip_ws();
    if (pos_ >= src_.size())
      throw ParseError("empty expression", 0, "a number, variable, function, or '('");
    ExprPtr e = additive();
    skip_ws();
    if (pos_ < src_.size())
      throw ParseError("trailing input", pos_, "end of expression or an operator");
    return e;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  ExprPtr additive() {
    ExprPtr node = multiplicative();
    while (true) {
      const char c = peek();
      if (c != '+' && c != '-') return node;
      const std::size_t at = pos_++;
      node = make_binary(c, std::move(node), multiplicative(), at);
    }
  }

  ExprPtr multiplicative() {
    ExprPtr node = unary();
    while (true) {
      const char c = peek();
      if (c != '*' && c != '/') return node;
      const std::size_t at = pos_++;
      node = make_binary(c, std::move(node), unary(), at);
    }
  }

  // Unary minus binds below '^', so -2^2 is -(2^2).
  ExprPtr unary() {
    if (peek() == '-') {
      const std::size_t at = pos_++;
      return make_negate(unary(), at);
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (peek() == '^') {
      const std::size_t at = pos_++;
      // Right-associative: the exponent re-enters at unary level, so
      // 2^3^2 = 2^(3^2) and 2^-1 parses.
      return make_binary('^', std::move(base), unary(), at);
    }
    return base;
  }

  ExprPtr primary() {
    const char c = peek();
    if (c == '\0')
      throw ParseError("unexpected end of input", pos_,
                       "a number, variable, function, or '('");
    if (c == '(') {
      ++pos_;
      ExprPtr inner = additive();
      if (peek() != ')') throw ParseError("unbalanced parenthesis", pos_, "')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_,
                     "a number, variable, function, or '('");
  }

  ExprPtr number() {
    const std::size_t start = pos_;
    bool digits = false;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
      digits = true;
    }
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        digits = true;
      }
    }
    if (!digits) throw ParseError("malformed number", start, "digits");
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t mark = pos_ + 1;
      if (mark < src_.size() && (src_[mark] == '+' || src_[mark] == '-')) ++mark;
      if (mark < src_.size() && std::isdigit(static_cast<unsigned char>(src_[mark]))) {
        pos_ = mark;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
          ++pos_;
      }
    }
    double value = 0.0;
    const auto res = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (res.ec != std::errc() || res.ptr != src_.data() + pos_)
      throw ParseError("number out of range", start, "a representable number");
    return make_number(value, start);
  }

  ExprPtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                  src_[pos_] == '_'))
      ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);
    if (name == "t") return make_variable('t', start);
    if (name == "x") return make_variable('x', start);
    for (const auto& entry : kFuncs) {
      if (name == entry.name) {
        if (peek() != '(')
          throw ParseError(std::string("function '") + entry.name + "' needs an argument",
                           pos_, "'('");
        ++pos_;
        ExprPtr arg = additive();
        if (peek() != ')') throw ParseError("unbalanced parenthesis", pos_, "')'");
        ++pos_;
        return make_call(entry.func, std::move(arg), start);
      }
    }
    throw ParseError("unknown identifier '" + std::string(name) + "'", start,
                     "t, x, or one of log exp sqrt abs sin cos");
  }
};

}  // namespace

ExprPtr parse(std::string_view source) { return Parser(source).run(); }

double eval(const Expr& e, double t, double x) {
  switch (e.kind) {
    case Expr::Kind::number:
      return e.number;
    case Expr::Kind::variable:
      return e.variable == 't' ? t : x;
    case Expr::Kind::unary_minus:
      return -eval(*e.args[0], t, x);
    case Expr::Kind::binary: {
      const double a = eval(*e.args[0], t, x);
      const double b = eval(*e.args[1], t, x);
      double r = 0.0;
      switch (e.op) {
        case '+': r = a + b; break;
        case '-': r = a - b; break;
        case '*': r = a * b; break;
        case '/':
          if (b == 0.0) throw EvalError("division by zero", e.offset);
          r = a / b;
          break;
        case '^': r = std::pow(a, b); break;
        default: throw EvalError("unknown operator", e.offset);
      }
      if (!std::isfinite(r)) throw EvalError("non-finite result", e.offset);
      return r;
    }
    case Expr::Kind::call: {
      const double a = eval(*e.args[0], t, x);
      double r = 0.0;
      switch (e.func) {
        case Func::log:
          if (!(a > 0.0)) throw EvalError("log of a non-positive value", e.offset);
          r = std::log(a);
          break;
        case Func::exp: r = std::exp(a); break;
        case Func::sqrt:
          if (a < 0.0) throw EvalError("sqrt of a negative value", e.offset);
          r = std::sqrt(a);
          break;
        case Func::abs: r = std::abs(a); break;
        case Func::sin: r = std::sin(a); break;
        case Func::cos: r = std::cos(a); break;
      }
      if (!std::isfinite(r)) throw EvalError("non-finite result", e.offset);
      return r;
    }
  }
  throw EvalError("malformed expression node", e.offset);
}

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::number:
      return csv::format_double(e.number);
    case Expr::Kind::variable:
      return std::string(1, e.variable);
    case Expr::Kind::unary_minus:
      return "(-" + to_string(*e.args[0]) + ")";
    case Expr::Kind::binary:
      return "(" + to_string(*e.args[0]) + e.op + to_string(*e.args[1]) + ")";
    case Expr::Kind::call:
      return std::string(func_name(e.func)) + "(" + to_string(*e.args[0]) + ")";
  }
  return "?";
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::number:
      return a.number == b.number;
    case Expr::Kind::variable:
      return a.variable == b.variable;
    case Expr::Kind::unary_minus:
      break;
    case Expr::Kind::binary:
      if (a.op != b.op) return false;
      break;
    case Expr::Kind::call:
      if (a.func != b.func) return false;
      break;
  }
  if (a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!structurally_equal(*a.args[i], *b.args[i])) return false;
  return true;
}

}  // namespace hhbvp::expr
