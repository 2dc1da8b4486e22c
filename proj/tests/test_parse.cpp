#include "nphk/error.hpp"
#include "nphk/parse.hpp"
#include "support.hpp"

#include <doctest.h>

#include <string>

using namespace nphk;

TEST_CASE("transcription") {
  auto p = parse_polynomial("x^2*y + y^3");
  CHECK(p.terms().size() == 2);
  CHECK(p.coefficient(2, 1) == 1);
  CHECK(p.coefficient(0, 3) == 1);
  auto q = parse_polynomial("-3/2*x^4");
  CHECK(q.terms().size() == 1);
  CHECK(q.coefficient(4, 0) == Rational(-3, 2));
}

TEST_CASE("juxtaposition, parentheses and unary minus") {
  CHECK(parse_polynomial("3x^2y") == parse_polynomial("3*x^2*y"));
  CHECK(parse_polynomial("-(x - y)^2") == parse_polynomial("-x^2 + 2*x*y - y^2"));
  CHECK(parse_polynomial("  x  *  ( y + 1/3 ) ") == parse_polynomial("x*y + 1/3*x"));
  CHECK(parse_polynomial("(x^2)^3") == parse_polynomial("x^6"));
  CHECK(parse_polynomial("x - x").is_zero());
}

TEST_CASE("printing round-trips through the parser") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = test::random_polynomial(rng, 7, 8);
    CHECK(parse_polynomial(p.to_string()) == p);
  }
  CHECK(parse_polynomial("(y - x^2)^2 + x^7").to_string() == "y^2 - 2*x^2*y + x^4 + x^7");
}

TEST_CASE("rejected inputs") {
  CHECK_THROWS_AS(parse_polynomial(""), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^-2"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x / y"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1.5*x"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("z^2"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(x + y"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^1000"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1/0"), ParseError);

  try {
    parse_polynomial("x^2 + @");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
    CHECK(e.kind() == ErrorKind::Parse);
  }
}
