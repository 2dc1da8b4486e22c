#include "nphk/error.hpp"
#include "nphk/exponent.hpp"

#include <doctest.h>

using namespace nphk;

namespace {

const Rational kHalf(1, 2);

// Interpolation through (1/2, 0), the L^(2m+2) Randol point and the p = 1
// point, written out from the anchor coordinates.
Rational chord_oracle(int m, Order n, const Rational& x) {
  Rational ax = Rational(4 * m + 3, 4 * m + 4), ay = Rational(5, 2) - Rational(3, 2 * m + 2);
  Rational by = Rational(5, 2) - (n.is_infinite() ? Rational(0) : Rational(1, 2 * n.value()));
  if (x <= ax) return ay * (x - kHalf) / (ax - kHalf);
  return ay + (by - ay) * (x - ax) / (1 - ax);
}

}  // namespace

TEST_CASE("k_p examples") {
  CHECK(kp_point(SingularityKind::d(2, 5), 1) == Rational(12, 5));
  CHECK(kp_point(SingularityKind::d(2, 7), 1) == Rational(17, 7));
  CHECK(kp_point(SingularityKind::d(3, 9), 1) == Rational(22, 9));
  CHECK(kp_point(SingularityKind::d(2, Order::infinite()), 1) == Rational(5, 2));
  CHECK(kp_point(SingularityKind::d(2, Order::infinite()), Rational(5, 3)) == Rational(12, 25));
  CHECK(kp_point(SingularityKind::of(KindTag::D4), 1) == Rational(7, 3));
  CHECK(kp_point(SingularityKind::of(KindTag::E6), 1) == Rational(29, 12));
  CHECK(kp_point(SingularityKind::of(KindTag::E7), 1) == Rational(22, 9));
  CHECK(kp_point(SingularityKind::of(KindTag::E8), 1) == Rational(37, 15));
  CHECK(kp_point(SingularityKind::of(KindTag::CaseBIV), 1) == Rational(5, 2));
  for (auto tag : {KindTag::D4, KindTag::E6, KindTag::CaseC})
    CHECK(kp_point(SingularityKind::of(tag), 2) == 0);
  CHECK_THROWS_AS(kp_point(SingularityKind::of(KindTag::D4), Rational(5, 2)), Error);
  CHECK_THROWS_AS(kp_point(SingularityKind::of(KindTag::UnsupportedHeightAbove2), 1), Error);
}

TEST_CASE("profiles") {
  auto e7 = kp_profile(SingularityKind::of(KindTag::E7));
  REQUIRE(e7.segments.size() == 1);
  CHECK(e7.segments[0].slope == Rational(44, 9));
  CHECK(kp_profile(SingularityKind::of(KindTag::CaseC)).segments[0].slope == 5);

  auto d27 = kp_profile(SingularityKind::d(2, 7));
  REQUIRE(d27.segments.size() == 2);
  // The crossover sits at the Randol point 1/p = 11/12.
  CHECK(d27.segments[0].u_to == Rational(5, 12));
  CHECK(d27.segments[1].u_from == Rational(5, 12));
  CHECK(d27.segments[0].slope < d27.segments[1].slope);  // convex
  CHECK(d27.evaluate(0) == 0);
  CHECK(d27.evaluate(kHalf) == Rational(17, 7));
}

TEST_CASE("Sugimoto thresholds") {
  auto a = sugimoto_q_threshold(3, Rational(1, 2) + Rational(1, 3), 6);
  CHECK(a.inv_p == Rational(11, 12));
  CHECK(a.k == 2);
  auto b = sugimoto_q_threshold(3, Rational(1, 2) + Rational(1, 4), 8);
  CHECK(b.inv_p == Rational(15, 16));
  CHECK(b.k == Rational(17, 8));
  auto c = sugimoto_q_threshold(3, 0, 2);
  CHECK(c.inv_p == Rational(3, 4));
  CHECK(c.k == Rational(5, 2));

  CHECK(sugimoto_inf_threshold(3, Rational(3, 5), 1) == Rational(12, 5));
  CHECK(sugimoto_inf_threshold(3, 1, 2) == 0);
  CHECK(sugimoto_inf_threshold(3, 1, 1) == 2);
}

TEST_CASE("interpolation envelope") {
  auto lin = interpolation_envelope({{kHalf, 0}, {1, 1}});
  CHECK(lin(Rational(3, 4)) == kHalf);

  auto env = interpolation_envelope({{kHalf, 0}, {Rational(11, 12), 2}, {1, Rational(12, 5)}});
  // These three anchors happen to be collinear.
  REQUIRE(env.breakpoints().size() == 2);
  CHECK((env.breakpoints()[1].second - env.breakpoints()[0].second) /
            (env.breakpoints()[1].first - env.breakpoints()[0].first) ==
        Rational(24, 5));

  auto collinear = interpolation_envelope({{0, 0}, {1, 1}, {2, 2}});
  CHECK(collinear.breakpoints().size() == 2);
  CHECK_THROWS_AS(interpolation_envelope({{0, 0}, {0, 1}}), Error);
}

TEST_CASE("NLA identity and sandwich against the chord oracle") {
  for (int m = 2; m <= 6; ++m) {
    std::vector<Order> ns{Order::infinite()};
    for (int n = 2 * m + 2; n <= 24; ++n) ns.push_back(n);
    for (Order n : ns) {
      CHECK(verify_nla_identity(m, n));
      auto kind = SingularityKind::d(m, n);
      Rational h = height(kind), hl = linear_height(kind);
      for (int j = 0; j <= 60; ++j) {
        Rational x = kHalf + Rational(j, 120);
        Rational u = x - kHalf;
        Rational k = kp_point(kind, 1 / x);
        CHECK(k == chord_oracle(m, n, x));
        CHECK((6 - 2 / hl) * u <= k);
        CHECK(k <= (6 - 2 / h) * u);
      }
    }
  }
  CHECK_THROWS_AS(verify_nla_identity(2, 5), Error);
  CHECK_THROWS_AS(nla_anchors(2, 5), Error);
}

TEST_CASE("Knapp exponents") {
  Rational third(1, 3);
  CHECK(knapp_exponent(third, third, 1, Rational(12, 5)) == Rational(-1, 15));
  CHECK(knapp_exponent(third, third, 1, Rational(7, 3) - Rational(1, 100)) == Rational(1, 100));
  CHECK(knapp_exponent(0, 0, 2, Rational(3, 7)) == Rational(-3, 7));

  CHECK(knapp_exponent_nla(2, 7, 1, Rational(17, 7)) == 0);
  CHECK(knapp_exponent_nla(2, 7, 1, Rational(17, 7) - Rational(1, 100)) == Rational(1, 100));
  for (int n = 6; n <= 20; ++n)
    for (int k = 0; k <= 4; ++k) CHECK(knapp_exponent_nla(2, n, 2, k) < 0);
}
