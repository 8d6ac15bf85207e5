#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "surfint/jet.hpp"

namespace surfint {

class ExpressionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed source text. `position` is the 0-based character offset.
class ParseError : public ExpressionError {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Evaluation left the real domain of an elementary function.
class DomainError : public ExpressionError {
 public:
  DomainError(const std::string& message, std::string subexpression);
  const std::string& subexpression() const { return subexpression_; }

 private:
  std::string subexpression_;
};

enum class Op : std::uint8_t {
  Literal,
  Variable,
  Add,
  Sub,
  Mul,
  Div,
  Neg,
  Pow,
  Sin,
  Cos,
  Tan,
  Exp,
  Log,
  Sqrt,
  Atan,
};

struct Node {
  Op op = Op::Literal;
  double literal = 0.0;  // Literal
  int index = 0;         // Variable: slot in the variable list; Pow: exponent
  std::shared_ptr<const Node> lhs;  // sole operand for unary ops
  std::shared_ptr<const Node> rhs;
};

bool equal_trees(const Node& a, const Node& b);

/// Immutable parsed expression. Copies share the tree.
///
/// Grammar, loosest to tightest binding:
///   sum     := product (('+' | '-') product)*
///   product := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' ['-'] integer)?
///   primary := number | variable | 'pi' | function '(' sum ')' | '(' sum ')'
class Expression {
 public:
  static Expression parse(std::string_view source, std::vector<std::string> variables);

  const std::string& source() const { return source_; }
  const std::vector<std::string>& variables() const { return variables_; }
  const Node& root() const { return *root_; }

  /// Names from the variable list that actually occur in the tree.
  std::vector<std::string> referenced_variables() const;

  /// Canonical text with minimal parentheses; parses back to an equal tree.
  std::string to_string() const;

  double evaluate(std::span<const double> point) const;
  Jet2 eval_jet2(std::span<const double> point) const;

  friend bool operator==(const Expression& a, const Expression& b) {
    return a.variables_ == b.variables_ && equal_trees(*a.root_, *b.root_);
  }

 private:
  struct Instruction {
    Op op;
    double literal;
    int index;
    const Node* node;
  };

  Expression() = default;
  void compile();
  Jet2 run(std::span<const double> point, bool derivatives) const;

  std::string source_;
  std::vector<std::string> variables_;
  std::shared_ptr<const Node> root_;
  std::vector<Instruction> program_;
  std::size_t max_stack_ = 0;
};

inline Expression parse(std::string_view source, std::vector<std::string> variables) {
  return Expression::parse(source, std::move(variables));
}

inline Jet2 eval_jet2(const Expression& e, std::span<const double> point) {
  return e.eval_jet2(point);
}

std::string to_string(const Node& node);

}  // namespace surfint
