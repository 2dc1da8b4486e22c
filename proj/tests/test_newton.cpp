#include "nphk/error.hpp"
#include "nphk/newton.hpp"
#include "newton_oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace nphk;
using nphk::test::P;

namespace {

LatticeSet sorted(LatticeSet s) {
  std::sort(s.begin(), s.end(), [](const Exponent& a, const Exponent& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; });
  return s;
}

LatticeSet random_support(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(0, 20), count(1, 12);
  std::set<std::pair<int, int>> pts;
  for (int k = count(rng); k > 0; --k) pts.insert({coord(rng), coord(rng)});
  LatticeSet s;
  for (auto [i, j] : pts) s.push_back({i, j});
  return s;
}

}  // namespace

TEST_CASE("taylor support") {
  CHECK(sorted(taylor_support(P("x^2 + y^2"))) == LatticeSet{{0, 2}, {2, 0}});
  CHECK(sorted(taylor_support(P("(y - x^2)^2 + x^7"))) == LatticeSet{{0, 2}, {2, 1}, {4, 0}, {7, 0}});
  CHECK(sorted(taylor_support(P("x^2*y + y^3"))) == LatticeSet{{0, 3}, {2, 1}});
  CHECK_THROWS_AS(taylor_support(P("x + y^2")), Error);
  CHECK_THROWS_AS(taylor_support(P("1 + x^2")), Error);
}

TEST_CASE("polygon vertices and edge weights") {
  auto a = build_polygon({{2, 0}, {0, 2}});
  CHECK(a.vertices == std::vector<Exponent>{{0, 2}, {2, 0}});
  auto edges = std::count_if(a.faces.begin(), a.faces.end(), [](const Face& f) { return f.kind == FaceKind::Edge; });
  CHECK(edges == 1);
  CHECK(a.faces[1].weight == Weight{Rational(1, 2), Rational(1, 2)});

  auto b = build_polygon({{0, 2}, {2, 1}, {4, 0}, {7, 0}});
  CHECK(b.vertices == std::vector<Exponent>{{0, 2}, {4, 0}});
  CHECK(b.faces[1].weight == Weight{Rational(1, 4), Rational(1, 2)});

  auto c = build_polygon({{1, 2}, {7, 0}});
  CHECK(c.vertices == std::vector<Exponent>{{1, 2}, {7, 0}});
  CHECK(c.faces[1].weight == Weight{Rational(1, 7), Rational(3, 7)});

  // Rays bracket the compact edges.
  CHECK(c.faces.front().kind == FaceKind::Ray);
  CHECK(c.faces.front().direction == RayDirection::Up);
  CHECK(c.faces.back().kind == FaceKind::Ray);
  CHECK(c.faces.back().direction == RayDirection::Right);
}

TEST_CASE("newton distance examples") {
  auto d1 = newton_distance(build_polygon(taylor_support(P("x^2 + y^2"))));
  CHECK(d1.d == 1);
  CHECK(d1.principal.kind == FaceKind::Edge);

  auto d2 = newton_distance(build_polygon(taylor_support(P("x^2*y + y^3"))));
  CHECK(d2.d == Rational(3, 2));
  CHECK(d2.principal.kind == FaceKind::Edge);

  auto d3 = newton_distance(build_polygon({{0, 2}}));
  CHECK(d3.d == 2);
  CHECK(d3.principal.kind == FaceKind::Ray);

  auto d4 = newton_distance(build_polygon({{2, 2}, {0, 5}, {5, 0}}));
  CHECK(d4.d == 2);
  CHECK(d4.principal.kind == FaceKind::Vertex);
}

TEST_CASE("newton distance agrees with two brute-force oracles") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    auto s = random_support(rng);
    auto nd = newton_distance(build_polygon(s));
    CHECK(nd.d == test::distance_by_supporting_lines(s));
    CHECK(nd.d == test::distance_by_dominated_combinations(s));
    CHECK(nd.principal.contains(nd.d, nd.d));
  }
}

TEST_CASE("polygon is invariant under adding dominated points") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    auto s = random_support(rng);
    auto base = build_polygon(s);
    auto extra = s;
    for (const auto& v : base.vertices) extra.push_back({v.i + 1, v.j + 3});
    CHECK(build_polygon(extra).vertices == base.vertices);
  }
}

TEST_CASE("face parts") {
  auto p = P("x^2*y + y^3 + x^5");
  auto nd = newton_distance(build_polygon(taylor_support(p)));
  CHECK(face_part(p, nd.principal) == P("x^2*y + y^3"));

  auto q = P("x^2 + y^2");
  CHECK(face_part(q, newton_distance(build_polygon(taylor_support(q))).principal) == q);

  auto r = P("(y - x^2)^2 + x^7");
  auto nr = newton_distance(build_polygon(taylor_support(r)));
  CHECK(face_part(r, nr.principal) == P("y^2 - 2*x^2*y + x^4"));

  Face stray{FaceKind::Edge, {0, 9}, {9, 0}, RayDirection::Up, Weight{Rational(1, 9), Rational(1, 9)}};
  CHECK_THROWS_AS(face_part(r, stray), Error);
}

TEST_CASE("distance under linear maps") {
  CHECK(distance_under_linear(P("(y - x^2)^2 + x^7"), LinearMap2::identity()) == Rational(4, 3));
  CHECK(distance_under_linear(P("x^2 + y^2"), LinearMap2{1, 2, -1, 3}) == 1);
  CHECK(distance_under_linear(P("(x + y)^2"), LinearMap2{1, 0, -1, 1}) == 2);
}
