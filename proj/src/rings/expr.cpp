#include "twistor/rings/expr.hpp"

#include <cctype>

namespace twistor::rings {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  BivarPoly parse() {
    BivarPoly r = expr();
    skip();
    if (i_ != s_.size()) error("trailing input");
    return r;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  [[noreturn]] void error(const std::string& what) {
    fail(ErrorKind::InvalidArgument, what + " at offset " + std::to_string(i_) + " in \"" + s_ + "\"");
  }

  BivarPoly expr() {
    BivarPoly acc = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++i_;
        acc = acc + term();
      } else if (c == '-') {
        ++i_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  bool starts_factor(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == '('; }

  BivarPoly term() {
    bool neg = false;
    for (char c = peek(); c == '-' || c == '+'; c = peek()) {
      if (c == '-') neg = !neg;
      ++i_;
    }
    if (!starts_factor(peek())) error("expected a factor");
    BivarPoly acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++i_;
        acc = acc * factor();
      } else if (starts_factor(c)) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return neg ? -acc : acc;
  }

  BivarPoly factor() {
    BivarPoly base = primary();
    if (peek() == '^') {
      ++i_;
      skip();
      size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) error("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, i_ - start))));
    }
    return base;
  }

  BivarPoly primary() {
    char c = peek();
    if (c == '(') {
      ++i_;
      BivarPoly r = expr();
      if (peek() != ')') error("expected )");
      ++i_;
      return r;
    }
    if (c == 'x') {
      ++i_;
      return BivarPoly::x();
    }
    if (c == 'y') {
      ++i_;
      return BivarPoly::y();
    }
    size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) error("expected a number");
    return BivarPoly::constant(mpz_class(s_.substr(start, i_ - start)));
  }

  const std::string& s_;
  size_t i_ = 0;
};

}  // namespace

BivarPoly parse_poly(const std::string& text) { return Parser(text).parse(); }

}  // namespace twistor::rings
