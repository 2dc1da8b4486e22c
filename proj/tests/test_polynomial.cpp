#include "nphk/error.hpp"
#include "nphk/polynomial.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace nphk;
using nphk::test::P;

TEST_CASE("expansion matches hand-expanded coefficients") {
  auto p = P("(y - x^2)^2 + x^7");
  CHECK(p.terms().size() == 4);
  CHECK(p.coefficient(0, 2) == 1);
  CHECK(p.coefficient(2, 1) == -2);
  CHECK(p.coefficient(4, 0) == 1);
  CHECK(p.coefficient(7, 0) == 1);
  CHECK(P("-3/2*x^4").coefficient(4, 0) == Rational(-3, 2));
}

TEST_CASE("ring laws on seeded random polynomials") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = test::random_polynomial(rng), b = test::random_polynomial(rng), c = test::random_polynomial(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(a.pow(3) == a * a * a);
    // Evaluation is a ring homomorphism.
    Rational x = test::small_rational(rng), y = test::small_rational(rng);
    CHECK((a * b).evaluate(x, y) == a.evaluate(x, y) * b.evaluate(x, y));
  }
}

TEST_CASE("linear maps") {
  CHECK(apply_linear(P("x^2"), LinearMap2::identity()) == P("x^2"));
  CHECK(apply_linear(P("x*y"), LinearMap2::swap()) == P("x*y"));
  CHECK(apply_linear(P("y^2"), LinearMap2{1, 0, 1, 1}) == P("y^2 + 2*x*y + x^2"));
  CHECK_THROWS_AS(apply_linear(P("x"), LinearMap2{1, 2, 2, 4}), Error);
}

TEST_CASE("linear maps act as a right group action") {
  std::mt19937_64 rng(12);
  int checked = 0;
  while (checked < 40) {
    LinearMap2 A{test::small_rational(rng), test::small_rational(rng), test::small_rational(rng),
                 test::small_rational(rng)};
    LinearMap2 B{test::small_rational(rng), test::small_rational(rng), test::small_rational(rng),
                 test::small_rational(rng)};
    if (A.determinant() == 0 || B.determinant() == 0) continue;
    auto p = test::random_polynomial(rng);
    CHECK(apply_linear(apply_linear(p, A), B) == apply_linear(p, A * B));
    CHECK(apply_linear(apply_linear(p, A), A.inverse()) == p);
    // Pointwise oracle: (p o A)(v) = p(A v).
    Rational x = test::small_rational(rng), y = test::small_rational(rng);
    CHECK(apply_linear(p, A).evaluate(x, y) == p.evaluate(A.a * x + A.b * y, A.c * x + A.d * y));
    ++checked;
  }
}

TEST_CASE("shear") {
  auto x2 = UnivariatePolynomial::monomial(2);
  CHECK(apply_shear(P("y^2"), x2) == P("y^2 + 2*x^2*y + x^4"));
  CHECK(apply_shear(P("(y - x^2)^2 + x^7"), x2) == P("y^2 + x^7"));
  CHECK(apply_shear(P("x^3*y + y^5"), UnivariatePolynomial()) == P("x^3*y + y^5"));

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    auto p = test::random_polynomial(rng);
    auto psi = test::random_univariate(rng, 1, 3);
    CHECK(apply_shear(apply_shear(p, psi), -psi) == p);
    Rational x = test::small_rational(rng), y = test::small_rational(rng);
    CHECK(apply_shear(p, psi).evaluate(x, y) == p.evaluate(x, y + psi.evaluate(x)));
  }
}

TEST_CASE("homogeneous parts") {
  CHECK(homogeneous_part(P("(y - x^2)^2 + x^7"), 3) == P("-2*x^2*y"));
  CHECK(homogeneous_part(P("x^2*y + y^3 + x^5"), 3) == P("x^2*y + y^3"));
  CHECK(homogeneous_part(P("x^2*y + y^3"), 9).is_zero());

  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    auto p = test::random_polynomial(rng, 6, 8);
    BivariatePolynomial sum;
    for (int k = 0; k <= 6; ++k) {
      auto h = homogeneous_part(p, k);
      CHECK(h.is_homogeneous());
      sum += h;
    }
    CHECK(sum == p);
  }
}

TEST_CASE("univariate order") {
  CHECK(univariate_order(UnivariatePolynomial::from_coefficients({0, 0, 0, 0, 0, 0, 0, 1, 1})) == Order(7));
  CHECK(univariate_order(UnivariatePolynomial()).is_infinite());
  CHECK(univariate_order(UnivariatePolynomial::from_coefficients({3, 0, -1})) == Order(0));
}

TEST_CASE("branch substitution agrees with pointwise evaluation") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    auto p = test::random_polynomial(rng);
    auto s = test::random_univariate(rng, 1, 3);
    auto exact = substitute_branch_exact(p, s);
    Rational x = test::small_rational(rng);
    CHECK(exact.evaluate(x) == p.evaluate(x, s.evaluate(x)));
    auto jet = substitute_branch(p, s, 6);
    CHECK(jet.exact() == exact.truncated(6).exact());
  }
}

TEST_CASE("truncated jets keep their marker") {
  auto p = P("y^2 + x^3").truncated(4);
  REQUIRE(p.truncation());
  auto q = p * P("x^2");
  CHECK(q.coefficient(2, 2) == 1);
  CHECK(q.coefficient(5, 0) == 0);  // beyond the jet order
  CHECK(*q.truncation() == 4);
  CHECK(p.to_string().find("O(") != std::string::npos);
}
