// Expression grammar shared by the CLI and the file formats:
//   expr   := term (('+' | '-') term)*
//   term   := ('-')* factor ('*' factor)*
//   factor := atom ('^' ('-')? integer)?
//   atom   := integer | identifier | '(' expr ')'
// Identifiers match [A-Za-z_][A-Za-z0-9_']*. Implicit multiplication is not
// allowed. Negative exponents make the result a Laurent expression, hence a
// RationalFunction.
#pragma once

#include <cctype>
#include <string>

#include "clift/rational.hpp"

namespace clift {

namespace detail {

class ExpressionParser {
 public:
  explicit ExpressionParser(const std::string& src) : src_(src) {}

  RationalFunction parse() {
    RationalFunction r = parse_expr();
    skip_ws();
    if (pos_ != src_.size())
      throw ParseError("unexpected trailing input at position " + std::to_string(pos_));
    return r;
  }

 private:
  RationalFunction parse_expr() {
    RationalFunction r = parse_term();
    for (;;) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        r += parse_term();
      } else if (peek() == '-') {
        ++pos_;
        r -= parse_term();
      } else {
        return r;
      }
    }
  }

  RationalFunction parse_term() {
    skip_ws();
    bool negate = false;
    while (peek() == '-') {
      ++pos_;
      negate = !negate;
      skip_ws();
    }
    RationalFunction r = parse_factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        r *= parse_factor();
      } else {
        break;
      }
    }
    return negate ? -r : r;
  }

  RationalFunction parse_factor() {
    RationalFunction base = parse_atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      bool neg = false;
      if (peek() == '-') {
        ++pos_;
        neg = true;
      }
      long long e = parse_integer_literal();
      return base.pow(static_cast<int>(neg ? -e : e));
    }
    return base;
  }

  RationalFunction parse_atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      RationalFunction r = parse_expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')' at position " + std::to_string(pos_));
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int v = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        v = v * 10 + (src_[pos_] - '0');
        ++pos_;
      }
      return RationalFunction(LaurentPolynomial(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < src_.size()) {
        char d = src_[pos_];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '\'') {
          name.push_back(d);
          ++pos_;
        } else {
          break;
        }
      }
      return RationalFunction::variable(name);
    }
    throw ParseError("unexpected character at position " + std::to_string(pos_));
  }

  long long parse_integer_literal() {
    skip_ws();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      throw ParseError("expected integer at position " + std::to_string(pos_));
    long long v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = v * 10 + (src_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  const std::string& src_;
  size_t pos_ = 0;
};

}  // namespace detail

inline RationalFunction parse_expression(const std::string& src) {
  return detail::ExpressionParser(src).parse();
}

}  // namespace clift
