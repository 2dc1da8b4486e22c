#include "nphk/rational.hpp"

#include "nphk/error.hpp"

#include <cctype>

namespace nphk {

std::string to_string(const Rational& r) {
  const Integer& num = boost::multiprecision::numerator(r);
  const Integer& den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::size_t k = 0;
  bool neg = false;
  if (k < s.size() && (s[k] == '-' || s[k] == '+')) neg = s[k++] == '-';
  if (k == s.size()) throw Error(ErrorKind::Parse, "bad rational '" + std::string(whole) + "'");
  Integer v = 0;
  for (; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw Error(ErrorKind::Parse, "bad rational '" + std::string(whole) + "'");
    v = v * 10 + (s[k] - '0');
  }
  return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

int Order::value() const {
  if (is_infinite()) throw Error(ErrorKind::Domain, "order is infinite");
  return value_;
}

std::string Order::to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

}  // namespace nphk
