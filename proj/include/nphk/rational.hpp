#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace nphk {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);
double to_double(const Rational& r);

// Nonnegative integer or infinity; used for branch orders m and n.
class Order {
 public:
  constexpr Order() = default;
  constexpr Order(int value) : value_(value) {}
  static constexpr Order infinite() {
    Order o;
    o.value_ = -1;
    return o;
  }

  constexpr bool is_infinite() const { return value_ < 0; }
  int value() const;
  std::string to_string() const;

  friend constexpr bool operator==(Order a, Order b) = default;
  friend constexpr std::strong_ordering operator<=>(Order a, Order b) {
    if (a.is_infinite() || b.is_infinite())
      return a.is_infinite() <=> b.is_infinite();
    return a.value_ <=> b.value_;
  }

 private:
  int value_ = 0;
};

}  // namespace nphk
