#include "nphk/parse.hpp"

#include "nphk/error.hpp"

#include <cctype>

namespace nphk {

namespace {

constexpr int kMaxExponent = 512;

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  BivariatePolynomial parse() {
    skip();
    if (pos_ == s_.size()) throw ParseError(pos_, "empty expression");
    BivariatePolynomial p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  BivariatePolynomial expr() {
    BivariatePolynomial acc = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      BivariatePolynomial t = term();
      if (c == '+')
        acc += t;
      else
        acc -= t;
    }
    return acc;
  }

  static bool starts_factor(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == '(';
  }

  BivariatePolynomial term() {
    BivariatePolynomial acc = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (starts_factor(c)) {
        acc = acc * power();
      } else if (c == '/') {
        throw ParseError(pos_, "division is only allowed inside a rational literal");
      } else {
        return acc;
      }
    }
  }

  BivariatePolynomial unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  BivariatePolynomial power() {
    BivariatePolynomial base = primary();
    if (peek() != '^') return base;
    ++pos_;
    std::size_t at = (skip(), pos_);
    if (peek() == '-') throw ParseError(at, "negative exponent");
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError(at, "exponent must be a nonnegative integer");
    Integer k = integer();
    if (peek() == '.' || peek() == '/') throw ParseError(pos_, "exponent must be a nonnegative integer");
    if (k > kMaxExponent) throw ParseError(at, "exponent too large");
    return base.pow(k.convert_to<unsigned>());
  }

  Integer integer() {
    Integer v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = v * 10 + (s_[pos_++] - '0');
    return v;
  }

  BivariatePolynomial primary() {
    char c = peek();
    std::size_t at = pos_;
    if (c == 'x') {
      ++pos_;
      return BivariatePolynomial::x();
    }
    if (c == 'y') {
      ++pos_;
      return BivariatePolynomial::y();
    }
    if (c == '(') {
      ++pos_;
      BivariatePolynomial inner = expr();
      if (peek() != ')') throw ParseError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer();
      if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E'))
        throw ParseError(pos_, "non-rational coefficient");
      Integer den = 1;
      if (peek() == '/') {
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError(pos_, "expected integer denominator");
        den = integer();
        if (den == 0) throw ParseError(at, "zero denominator");
        if (pos_ < s_.size() && s_[pos_] == '.') throw ParseError(pos_, "non-rational coefficient");
      }
      return BivariatePolynomial::constant(Rational(num, den));
    }
    if (c == '\0') throw ParseError(pos_, "unexpected end of input");
    if (c == '.') throw ParseError(pos_, "non-rational coefficient");
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

BivariatePolynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace nphk
