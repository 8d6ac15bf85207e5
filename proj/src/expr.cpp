#include "surfint/expr.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <utility>

namespace surfint {

ParseError::ParseError(const std::string& message, std::size_t position)
    : ExpressionError("syntax error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

DomainError::DomainError(const std::string& message, std::string subexpression)
    : ExpressionError(message + " in '" + subexpression + "'"),
      subexpression_(std::move(subexpression)) {}

namespace {

using NodePtr = std::shared_ptr<const Node>;

struct FunctionName {
  std::string_view name;
  Op op;
};

constexpr std::array<FunctionName, 7> kFunctions{{
    {"sin", Op::Sin},
    {"cos", Op::Cos},
    {"tan", Op::Tan},
    {"exp", Op::Exp},
    {"log", Op::Log},
    {"sqrt", Op::Sqrt},
    {"atan", Op::Atan},
}};

std::optional<Op> function_op(std::string_view name) {
  for (const auto& f : kFunctions)
    if (f.name == name) return f.op;
  return std::nullopt;
}

std::string_view function_name(Op op) {
  for (const auto& f : kFunctions)
    if (f.op == op) return f.name;
  return "?";
}

NodePtr make_literal(double v) {
  auto n = std::make_shared<Node>();
  n->op = Op::Literal;
  n->literal = v;
  return n;
}

NodePtr make_unary(Op op, NodePtr a, int index = 0) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->index = index;
  n->lhs = std::move(a);
  return n;
}

NodePtr make_binary(Op op, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

class Parser {
 public:
  Parser(std::string_view src, const std::vector<std::string>& vars) : src_(src), vars_(vars) {}

  NodePtr parse() {
    skip_ws();
    if (pos_ == src_.size()) throw ParseError("empty expression", pos_);
    NodePtr e = sum();
    skip_ws();
    if (pos_ != src_.size())
      throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  NodePtr sum() {
    NodePtr lhs = product();
    for (;;) {
      if (accept('+'))
        lhs = make_binary(Op::Add, lhs, product());
      else if (accept('-'))
        lhs = make_binary(Op::Sub, lhs, product());
      else
        return lhs;
    }
  }

  NodePtr product() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*'))
        lhs = make_binary(Op::Mul, lhs, unary());
      else if (accept('/'))
        lhs = make_binary(Op::Div, lhs, unary());
      else
        return lhs;
    }
  }

  NodePtr unary() {
    if (accept('-')) return make_unary(Op::Neg, unary());
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t at = pos_;
    bool negative = false;
    if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) {
      negative = src_[pos_] == '-';
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (digits == pos_ || (pos_ < src_.size() && (src_[pos_] == '.' || src_[pos_] == 'e' ||
                                                   src_[pos_] == 'E'))) {
      throw ParseError("exponent must be an integer literal", at);
    }
    int exponent = 0;
    auto [end, ec] = std::from_chars(src_.data() + digits, src_.data() + pos_, exponent);
    if (ec != std::errc{}) throw ParseError("exponent out of range", at);
    if (accept('^')) throw ParseError("chained '^' needs parentheses", pos_ - 1);
    return make_unary(Op::Pow, std::move(base), negative ? -exponent : exponent);
  }

  NodePtr primary() {
    skip_ws();
    if (pos_ == src_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = sum();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  NodePtr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
      if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look]))) {
        pos_ = look;
        digits();
      }
    }
    double value = 0.0;
    auto [end, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (ec != std::errc{} || end != src_.data() + pos_) throw ParseError("malformed number", start);
    return make_literal(value);
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);
    skip_ws();
    const bool call = pos_ < src_.size() && src_[pos_] == '(';
    if (call) {
      const auto op = function_op(name);
      if (!op) throw ParseError("unknown function '" + std::string(name) + "'", start);
      ++pos_;
      NodePtr arg = sum();
      if (accept(',')) throw ParseError("'" + std::string(name) + "' takes one argument", pos_ - 1);
      expect(')');
      return make_unary(*op, std::move(arg));
    }
    const auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it != vars_.end()) {
      auto n = std::make_shared<Node>();
      n->op = Op::Variable;
      n->index = static_cast<int>(it - vars_.begin());
      return n;
    }
    if (name == "pi") return make_literal(std::numbers::pi);
    if (function_op(name)) throw ParseError("function '" + std::string(name) + "' needs '('", pos_);
    throw ParseError("unknown variable '" + std::string(name) + "'", start);
  }

  std::string_view src_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

int precedence(Op op) {
  switch (op) {
    case Op::Add:
    case Op::Sub:
      return 1;
    case Op::Mul:
    case Op::Div:
      return 2;
    case Op::Neg:
      return 3;
    case Op::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string format_double(double v) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

void print(const Node& n, const std::vector<std::string>* vars, int min_prec, std::string& out) {
  const int p = precedence(n.op);
  const bool paren = p < min_prec;
  if (paren) out += '(';
  switch (n.op) {
    case Op::Literal:
      out += format_double(n.literal);
      break;
    case Op::Variable:
      if (vars && n.index < static_cast<int>(vars->size()))
        out += (*vars)[n.index];
      else
        out += "$" + std::to_string(n.index);
      break;
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div: {
      static constexpr std::array<char, 4> sym{'+', '-', '*', '/'};
      print(*n.lhs, vars, p, out);
      out += sym[static_cast<int>(n.op) - static_cast<int>(Op::Add)];
      print(*n.rhs, vars, p + 1, out);
      break;
    }
    case Op::Neg:
      out += '-';
      print(*n.lhs, vars, 3, out);
      break;
    case Op::Pow:
      print(*n.lhs, vars, 5, out);
      out += '^';
      out += std::to_string(n.index);
      break;
    default:
      out += function_name(n.op);
      out += '(';
      print(*n.lhs, vars, 0, out);
      out += ')';
      break;
  }
  if (paren) out += ')';
}

double ipow(double a, int k) {
  double r = 1.0;
  double b = k < 0 ? 1.0 / a : a;
  for (unsigned e = static_cast<unsigned>(k < 0 ? -k : k); e; e >>= 1) {
    if (e & 1u) r *= b;
    b *= b;
  }
  return r;
}

}  // namespace

bool equal_trees(const Node& a, const Node& b) {
  if (a.op != b.op) return false;
  switch (a.op) {
    case Op::Literal:
      return a.literal == b.literal;
    case Op::Variable:
      return a.index == b.index;
    case Op::Pow:
      return a.index == b.index && equal_trees(*a.lhs, *b.lhs);
    default:
      if (!equal_trees(*a.lhs, *b.lhs)) return false;
      return !a.rhs || equal_trees(*a.rhs, *b.rhs);
  }
}

std::string to_string(const Node& node) {
  std::string out;
  print(node, nullptr, 0, out);
  return out;
}

Expression Expression::parse(std::string_view source, std::vector<std::string> variables) {
  if (variables.size() > kMaxVariables)
    throw ExpressionError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  Expression e;
  e.root_ = Parser(source, variables).parse();
  e.source_ = std::string(source);
  e.variables_ = std::move(variables);
  e.compile();
  return e;
}

void Expression::compile() {
  program_.clear();
  std::size_t depth = 0;
  max_stack_ = 0;
  auto emit = [&](auto&& self, const Node& n) -> void {
    if (n.lhs) self(self, *n.lhs);
    if (n.rhs) self(self, *n.rhs);
    program_.push_back({n.op, n.literal, n.index, &n});
    if (n.op == Op::Literal || n.op == Op::Variable)
      ++depth;
    else if (n.rhs)
      --depth;
    max_stack_ = std::max(max_stack_, depth);
  };
  emit(emit, *root_);
}

std::vector<std::string> Expression::referenced_variables() const {
  std::vector<bool> used(variables_.size(), false);
  for (const auto& ins : program_)
    if (ins.op == Op::Variable) used[ins.index] = true;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (used[i]) out.push_back(variables_[i]);
  return out;
}

std::string Expression::to_string() const {
  std::string out;
  print(*root_, &variables_, 0, out);
  return out;
}

double Expression::evaluate(std::span<const double> point) const {
  return run(point, false).value();
}

Jet2 Expression::eval_jet2(std::span<const double> point) const { return run(point, true); }

Jet2 Expression::run(std::span<const double> point, bool derivatives) const {
  if (point.size() != variables_.size())
    throw ExpressionError("expected " + std::to_string(variables_.size()) + " coordinates, got " +
                          std::to_string(point.size()));
  // A jet over zero variables carries only the value.
  const std::size_t n = derivatives ? variables_.size() : 0;
  constexpr std::size_t kInline = 48;
  std::array<Jet2, kInline> inline_stack;
  std::vector<Jet2> heap_stack;
  Jet2* stack = inline_stack.data();
  if (max_stack_ > kInline) {
    heap_stack.resize(max_stack_);
    stack = heap_stack.data();
  }
  std::size_t top = 0;

  auto fail = [this](const char* what, const Node* node) -> void {
    std::string sub;
    print(*node, &variables_, 0, sub);
    throw DomainError(what, sub);
  };

  for (const auto& ins : program_) {
    switch (ins.op) {
      case Op::Literal:
        stack[top++] = Jet2::constant(ins.literal, n);
        continue;
      case Op::Variable:
        stack[top++] = n == 0 ? Jet2::constant(point[ins.index], 0)
                              : Jet2::variable(point[ins.index], n, static_cast<std::size_t>(ins.index));
        continue;
      case Op::Add:
        --top;
        stack[top - 1] = stack[top - 1] + stack[top];
        break;
      case Op::Sub:
        --top;
        stack[top - 1] = stack[top - 1] - stack[top];
        break;
      case Op::Mul:
        --top;
        stack[top - 1] = stack[top - 1] * stack[top];
        break;
      case Op::Div: {
        --top;
        const double b = stack[top].value();
        if (b == 0.0) fail("division by zero", ins.node);
        stack[top - 1] = stack[top - 1] * stack[top].chain(1.0 / b, -1.0 / (b * b), 2.0 / (b * b * b));
        break;
      }
      case Op::Neg:
        stack[top - 1] = -stack[top - 1];
        break;
      case Op::Pow: {
        const double a = stack[top - 1].value();
        const int k = ins.index;
        if (k < 0 && a == 0.0) fail("negative power of zero", ins.node);
        const double f1 = k == 0 ? 0.0 : k * ipow(a, k - 1);
        const double f2 = (k == 0 || k == 1) ? 0.0 : static_cast<double>(k) * (k - 1) * ipow(a, k - 2);
        stack[top - 1] = stack[top - 1].chain(ipow(a, k), f1, f2);
        break;
      }
      case Op::Sin: {
        const double a = stack[top - 1].value();
        const double s = std::sin(a);
        stack[top - 1] = stack[top - 1].chain(s, std::cos(a), -s);
        break;
      }
      case Op::Cos: {
        const double a = stack[top - 1].value();
        const double c = std::cos(a);
        stack[top - 1] = stack[top - 1].chain(c, -std::sin(a), -c);
        break;
      }
      case Op::Tan: {
        const double a = stack[top - 1].value();
        const double c = std::cos(a);
        if (c == 0.0) fail("tan pole", ins.node);
        const double t = std::tan(a);
        const double sec2 = 1.0 / (c * c);
        stack[top - 1] = stack[top - 1].chain(t, sec2, 2.0 * t * sec2);
        break;
      }
      case Op::Exp: {
        const double e = std::exp(stack[top - 1].value());
        stack[top - 1] = stack[top - 1].chain(e, e, e);
        break;
      }
      case Op::Log: {
        const double a = stack[top - 1].value();
        if (!(a > 0.0)) fail("log of non-positive value", ins.node);
        stack[top - 1] = stack[top - 1].chain(std::log(a), 1.0 / a, -1.0 / (a * a));
        break;
      }
      case Op::Sqrt: {
        const double a = stack[top - 1].value();
        if (a < 0.0 || (a == 0.0 && n > 0)) fail("sqrt outside its differentiable domain", ins.node);
        const double r = std::sqrt(a);
        stack[top - 1] = n == 0 ? Jet2::constant(r, 0)
                                : stack[top - 1].chain(r, 0.5 / r, -0.25 / (r * a));
        break;
      }
      case Op::Atan: {
        const double a = stack[top - 1].value();
        const double d = 1.0 / (1.0 + a * a);
        stack[top - 1] = stack[top - 1].chain(std::atan(a), d, -2.0 * a * d * d);
        break;
      }
    }
    if (!std::isfinite(stack[top - 1].value())) fail("non-finite value", ins.node);
  }
  return stack[0];
}

}  // namespace surfint
