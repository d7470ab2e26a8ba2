#pragma once

// Expressions in s for prescribing curvature and torsion.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | factor
//   factor := primary ('^' integer)*
//   primary:= number | 's' | func '(' expr ')' | '(' expr ')'
//   func   := sin | cos | sinh | cosh | exp
//
// number is digits with an optional fraction and exponent ("2", ".5",
// "1.5e-3"); integer is at most 9 digits. Spaces, tabs and newlines may
// separate tokens. The tree keeps the source lexemes, so printing gives the
// input back without its whitespace.

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <string>
#include <string_view>
#include <type_traits>

#include "mannheim/error.hpp"
#include "mannheim/series.hpp"

namespace mannheim {

class Expr {
 public:
  enum class Kind { Number, Variable, Function, Group, Binary, Power, Negate };

  Kind kind() const { return node_->kind; }

  /// Source text without whitespace.
  std::string print() const {
    std::string out;
    print(*node_, out);
    return out;
  }

  double operator()(double s) const { return eval<double>(*node_, s); }
  Series operator()(const Series& s) const { return eval<Series>(*node_, s); }

  static Expr parse(std::string_view text);

 private:
  struct Node {
    Kind kind;
    std::string lexeme;  // number text, function name, operator, exponent digits
    double number = 0.0;
    unsigned exponent = 0;
    std::shared_ptr<const Node> a, b;
  };
  using NodePtr = std::shared_ptr<const Node>;

  explicit Expr(NodePtr n) : node_(std::move(n)) {}

  static void print(const Node& n, std::string& out) {
    switch (n.kind) {
      case Kind::Number: out += n.lexeme; break;
      case Kind::Variable: out += 's'; break;
      case Kind::Function:
        out += n.lexeme;
        out += '(';
        print(*n.a, out);
        out += ')';
        break;
      case Kind::Group:
        out += '(';
        print(*n.a, out);
        out += ')';
        break;
      case Kind::Binary:
        print(*n.a, out);
        out += n.lexeme;
        print(*n.b, out);
        break;
      case Kind::Power:
        print(*n.a, out);
        out += '^';
        out += n.lexeme;
        break;
      case Kind::Negate:
        out += '-';
        print(*n.a, out);
        break;
    }
  }

  static bool is_zero(double x) { return x == 0.0; }
  static bool is_zero(const Series& x) { return x[0] == 0.0; }

  template <class V>
  static V constant_like(double c, const V& s) {
    if constexpr (std::is_same_v<V, double>) {
      (void)s;
      return c;
    } else {
      return Series::constant(c, s.order());
    }
  }

  template <class V>
  static V eval(const Node& n, const V& s) {
    using std::cos, std::cosh, std::exp, std::sin, std::sinh;
    switch (n.kind) {
      case Kind::Number: return constant_like(n.number, s);
      case Kind::Variable: return s;
      case Kind::Group: return eval(*n.a, s);
      case Kind::Negate: return -eval(*n.a, s);
      case Kind::Function: {
        const V x = eval(*n.a, s);
        if (n.lexeme == "sin") return sin(x);
        if (n.lexeme == "cos") return cos(x);
        if (n.lexeme == "sinh") return sinh(x);
        if (n.lexeme == "cosh") return cosh(x);
        return exp(x);
      }
      case Kind::Power: {
        const V x = eval(*n.a, s);
        if constexpr (std::is_same_v<V, double>) {
          return std::pow(x, static_cast<double>(n.exponent));
        } else {
          return pow(x, n.exponent);
        }
      }
      case Kind::Binary: {
        const V l = eval(*n.a, s);
        const V r = eval(*n.b, s);
        switch (n.lexeme[0]) {
          case '+': return l + r;
          case '-': return l - r;
          case '*': return l * r;
          default:
            if (is_zero(r)) fail(ErrorCode::DivisionByZero, "division by zero in " + n.lexeme);
            return l / r;
        }
      }
    }
    return constant_like(0.0, s);
  }

  friend class ExprParser;
  NodePtr node_;
};

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Expr parse() {
    auto n = expr();
    skip_space();
    if (pos_ != text_.size()) error("unexpected character");
    return Expr(std::move(n));
  }

 private:
  using Node = Expr::Node;
  using NodePtr = Expr::NodePtr;
  using Kind = Expr::Kind;

  [[noreturn]] void error(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError, what + " at offset " + std::to_string(pos_),
                std::nan(""), pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  static NodePtr make(Kind k, std::string lexeme = {}, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->lexeme = std::move(lexeme);
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
  }

  NodePtr expr() {
    NodePtr l = term();
    while (peek('+') || peek('-')) {
      const char op = text_[pos_++];
      l = make(Kind::Binary, std::string(1, op), l, term());
    }
    return l;
  }

  NodePtr term() {
    NodePtr l = unary();
    while (peek('*') || peek('/')) {
      const char op = text_[pos_++];
      l = make(Kind::Binary, std::string(1, op), l, unary());
    }
    return l;
  }

  NodePtr unary() {
    if (peek('-')) {
      ++pos_;
      return make(Kind::Negate, "-", unary());
    }
    return factor();
  }

  NodePtr factor() {
    NodePtr base = primary();
    while (peek('^')) {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start) error("expected integer exponent");
      if (pos_ - start > 9) {
        pos_ = start;
        error("exponent too long");
      }
      auto n = std::make_shared<Node>();
      n->kind = Kind::Power;
      n->lexeme = std::string(text_.substr(start, pos_ - start));
      n->exponent = static_cast<unsigned>(std::stoul(n->lexeme));
      n->a = std::move(base);
      base = std::move(n);
    }
    return base;
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= text_.size()) error("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      if (!peek(')')) error("expected ')'");
      ++pos_;
      return make(Kind::Group, "", inner);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string word(text_.substr(start, pos_ - start));
      if (word == "s") return make(Kind::Variable, "s");
      if (word == "sin" || word == "cos" || word == "sinh" || word == "cosh" || word == "exp") {
        if (!peek('(')) error("expected '(' after " + word);
        ++pos_;
        NodePtr arg = expr();
        if (!peek(')')) error("expected ')'");
        ++pos_;
        return make(Kind::Function, word, arg);
      }
      pos_ = start;
      error("unknown identifier '" + word + "'");
    }
    error(std::string("unexpected character '") + c + "'");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    auto digits = [this] {
      const std::size_t from = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return pos_ - from;
    };
    std::size_t count = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      count += digits();
    }
    if (count == 0) {
      pos_ = start;
      error("malformed number");
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      const std::size_t mark = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (digits() == 0) {
        pos_ = mark;
        error("malformed exponent");
      }
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::Number;
    n->lexeme = std::string(text_.substr(start, pos_ - start));
    n->number = std::strtod(n->lexeme.c_str(), nullptr);
    return n;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline Expr Expr::parse(std::string_view text) { return ExprParser(text).parse(); }

inline Expr parse_expr(std::string_view text) { return Expr::parse(text); }

}  // namespace mannheim
