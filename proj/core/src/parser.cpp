#include "exotica/parser.hpp"

#include <algorithm>
#include <cctype>

namespace exotica {

namespace {

constexpr unsigned kMaxExponent = 1u << 16;

std::string located(const std::string& message, std::size_t line, std::size_t column) {
  return message + " at line " + std::to_string(line) + ", column " + std::to_string(column);
}

class Parser {
 public:
  Parser(std::string_view text, const std::optional<std::vector<std::string>>& context)
      : text_(text), context_(context) {}

  Polynomial run() {
    skip_space();
    Polynomial p = expr();
    skip_space();
    if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
    return p;
  }

  std::vector<std::string> names_seen() const { return seen_; }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(const std::string& msg, ErrorCode code = ErrorCode::kInvalidArgument) const {
    throw ParseError(code, msg, line_, col_);
  }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      out += peek();
      advance();
    }
    return out;
  }

  Polynomial expr() {
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      advance();
      skip_space();
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') break;
      advance();
      skip_space();
      Polynomial rhs = term();
      if (c == '+') acc += rhs;
      else acc -= rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_space();
      if (peek() != '*') break;
      advance();
      skip_space();
      acc *= factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    skip_space();
    if (peek() == '^') {
      advance();
      skip_space();
      std::string e = digits();
      if (e.empty()) fail("expected a non-negative integer exponent after '^'");
      if (e.size() > 6 || std::stoul(e) > kMaxExponent) fail("exponent too large");
      b = b.pow(static_cast<long>(std::stoul(e)));
      skip_space();
      if (peek() == '^') fail("chained '^' is ambiguous; use parentheses");
    }
    return b;
  }

  Polynomial base() {
    char c = peek();
    if (at_end()) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      Rational r{Integer(num)};
      if (peek() == '/') {
        advance();
        std::string den = digits();
        if (den.empty()) fail("expected a denominator after '/'");
        Integer d(den);
        if (d == 0) fail("zero denominator", ErrorCode::kDivisionByZero);
        r = Rational(Integer(num), d);
        r.canonicalize();
      }
      if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '(')
        fail("implicit multiplication is not supported; write '*'");
      return Polynomial(GaussRational(r));
    }
    if (c == '(') {
      advance();
      skip_space();
      Polynomial inner = expr();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      advance();
      return inner;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t line = line_, col = col_;
      std::string name;
      while (!at_end()) {
        char d = peek();
        if ((d >= 'a' && d <= 'z') || std::isdigit(static_cast<unsigned char>(d)) || d == '_') {
          name += d;
          advance();
        } else {
          break;
        }
      }
      if (name == "i") return Polynomial(GaussRational::i());
      if (context_ && std::find(context_->begin(), context_->end(), name) == context_->end())
        throw ParseError(ErrorCode::kUnknownVariable, "unknown variable '" + name + "'", line, col);
      if (std::find(seen_.begin(), seen_.end(), name) == seen_.end()) seen_.push_back(name);
      return Polynomial::variable(name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::optional<std::vector<std::string>>& context_;
  std::vector<std::string> seen_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

ParseError::ParseError(ErrorCode code, const std::string& message, std::size_t line,
                       std::size_t column)
    : Error(code, located(message, line, column)), message_(message), line_(line), column_(column) {}

const std::vector<std::string>& default_variable_order() {
  static const std::vector<std::string> order{"x", "y", "z", "u", "v", "w", "t"};
  return order;
}

Polynomial parse_polynomial(std::string_view text,
                            const std::optional<std::vector<std::string>>& context) {
  Parser parser(text, context);
  Polynomial p = parser.run();
  if (context) return p.with_variables(*context);
  std::vector<std::string> order;
  auto seen = parser.names_seen();
  for (const auto& v : default_variable_order())
    if (std::find(seen.begin(), seen.end(), v) != seen.end()) order.push_back(v);
  for (const auto& v : seen)
    if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
  return p.trimmed().with_variables(order);
}

}  // namespace exotica
