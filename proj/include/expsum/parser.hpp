#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "expsum/polynomial.hpp"

namespace expsum {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

// Recursive-descent parser for the expression grammar
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := int | var | '(' expr ')'
//   var    := 'x' uint | 'x' | 'y' | 'z' | 'w'
// Whitespace is insignificant. Coefficients are arbitrary-precision.
class PolynomialParser {
 public:
  PolynomialParser(std::string text, int nvars) : text_(std::move(text)), nvars_(nvars) {}

  Polynomial parse() {
    pos_ = 0;
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

 private:
  Polynomial expr() {
    skip_ws();
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      if (get() == '-') sign = -1;
    }
    Polynomial acc = term();
    if (sign < 0) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      get();
      Polynomial t = term();
      if (c == '+') acc += t; else acc -= t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      get();
      acc *= factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      std::size_t at = pos_;
      if (!std::isdigit(peek())) throw ParseError("expected exponent", pos_);
      unsigned long e = 0;
      while (std::isdigit(peek())) {
        e = e * 10 + static_cast<unsigned long>(get() - '0');
        if (e > 100000) throw ParseError("exponent too large", at);
      }
      return b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  Polynomial base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      Polynomial p = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      get();
      return p;
    }
    if (std::isdigit(c)) {
      std::string digits;
      while (std::isdigit(peek())) digits += get();
      return Polynomial::constant(nvars_, Int(digits));
    }
    if (c == 'x' || c == 'y' || c == 'z' || c == 'w') {
      std::size_t at = pos_;
      get();
      if (c == 'x' && std::isdigit(peek())) {
        unsigned long idx = 0;
        while (std::isdigit(peek())) {
          idx = idx * 10 + static_cast<unsigned long>(get() - '0');
          if (idx > 1000) throw ParseError("variable index out of range", at);
        }
        if (idx < 1 || static_cast<int>(idx) > nvars_) throw ParseError("variable index out of range", at);
        return Polynomial::variable(nvars_, static_cast<int>(idx - 1));
      }
      int idx = (c == 'x') ? 0 : (c == 'y') ? 1 : (c == 'z') ? 2 : 3;
      if (idx >= nvars_) throw ParseError("variable index out of range", at);
      return Polynomial::variable(nvars_, idx);
    }
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return text_[pos_++]; }

  std::string text_;
  int nvars_;
  std::size_t pos_ = 0;
};

inline Polynomial parse_polynomial(const std::string& text, int nvars) {
  return PolynomialParser(text, nvars).parse();
}

}  // namespace expsum
