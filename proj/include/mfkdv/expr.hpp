#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "mfkdv/error.hpp"

namespace mfkdv {

/// Syntax error in an initial-data expression; position is a 0-based offset.
class ParseError : public ConfigError {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Arithmetic expression in the variable x.
///
/// Grammar, loosest binding first:
///   expr   := term (('+' | '-') term)*          left associative
///   term   := unary (('*' | '/') unary)*        left associative
///   unary  := ('-' | '+') unary | power
///   power  := primary ('^' unary)?              right associative
///   primary:= number | x | pi | e | func '(' expr ')' | '(' expr ')'
/// so -x^2 means -(x^2) and 2^-1 means 2^(-1). There is no implicit
/// multiplication. Functions: exp sin cos tanh cosh sech sqrt abs.
class InitExpr {
 public:
  struct Node;

  static InitExpr parse(std::string_view source);

  double operator()(double x) const;
  /// Canonical fully parenthesized form; parsing it yields the same tree.
  std::string to_string() const;
  const std::string& source() const { return source_; }

  /// Structural equality of syntax trees.
  friend bool operator==(const InitExpr& a, const InitExpr& b);

 private:
  std::shared_ptr<const Node> root_;
  std::string source_;
};

inline InitExpr parse_expr(std::string_view source) { return InitExpr::parse(source); }

}  // namespace mfkdv
