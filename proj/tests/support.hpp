#pragma once

#include "nphk/parse.hpp"
#include "nphk/polynomial.hpp"

#include <random>

namespace nphk::test {

inline BivariatePolynomial P(const char* text) { return parse_polynomial(text); }

inline Rational small_rational(std::mt19937_64& rng, int num = 5, int den = 4) {
  std::uniform_int_distribution<int> n(-num, num), d(1, den);
  return Rational(n(rng), d(rng));
}

// Up to `terms` monomials of total degree <= max_degree with small rational coefficients.
inline BivariatePolynomial random_polynomial(std::mt19937_64& rng, int max_degree = 5, int terms = 6) {
  std::uniform_int_distribution<int> e(0, max_degree), count(0, terms);
  BivariatePolynomial p;
  for (int t = count(rng); t > 0; --t) {
    int i = e(rng), j = e(rng);
    if (i + j > max_degree) j = max_degree - i;
    p += BivariatePolynomial::monomial(i, j, small_rational(rng));
  }
  return p;
}

inline UnivariatePolynomial random_univariate(std::mt19937_64& rng, int lowest, int highest) {
  UnivariatePolynomial q;
  for (int k = lowest; k <= highest; ++k) q.set(k, small_rational(rng));
  return q;
}

}  // namespace nphk::test
