#include "nphk/newton.hpp"

#include "nphk/error.hpp"

#include <algorithm>

namespace nphk {

namespace {

Weight edge_weight(const Exponent& a, const Exponent& b) {
  Rational det = Rational(a.i) * b.j - Rational(a.j) * b.i;
  return {Rational(b.j - a.j) / det, Rational(a.i - b.i) / det};
}

// Cross product of (b - a) and (c - b); positive for a left turn.
long long turn(const Exponent& a, const Exponent& b, const Exponent& c) {
  return static_cast<long long>(b.i - a.i) * (c.j - b.j) - static_cast<long long>(b.j - a.j) * (c.i - b.i);
}

}  // namespace

bool Face::contains(const Rational& t1, const Rational& t2) const {
  switch (kind) {
    case FaceKind::Vertex:
      return t1 == start.i && t2 == start.j;
    case FaceKind::Edge:
      return weight->k1 * t1 + weight->k2 * t2 == 1 && t1 >= start.i && t1 <= end.i;
    case FaceKind::Ray:
      if (direction == RayDirection::Up) return t1 == start.i && t2 >= start.j;
      return t2 == start.j && t1 >= start.i;
  }
  return false;
}

LatticeSet taylor_support(const BivariatePolynomial& p) {
  LatticeSet s;
  for (const auto& [e, c] : p.terms()) {
    if (e.total() < 2)
      throw Error(ErrorKind::NotCriticalAtOrigin,
                  "phase has a " + std::string(e.total() == 0 ? "constant" : "linear") + " term at the origin");
    s.push_back(e);
  }
  return s;
}

NewtonPolygon build_polygon(const LatticeSet& s) {
  if (s.empty()) throw Error(ErrorKind::Domain, "empty support");
  LatticeSet pts = s;
  std::sort(pts.begin(), pts.end(), [](const Exponent& a, const Exponent& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  // Staircase: keep points strictly lower than everything to their left.
  LatticeSet stair;
  for (const auto& e : pts)
    if (stair.empty() || e.j < stair.back().j) {
      if (!stair.empty() && stair.back().i == e.i) continue;
      stair.push_back(e);
    }
  LatticeSet hull;
  for (const auto& e : stair) {
    while (hull.size() >= 2 && turn(hull[hull.size() - 2], hull.back(), e) <= 0) hull.pop_back();
    hull.push_back(e);
  }

  NewtonPolygon poly;
  poly.vertices = hull;
  const Exponent& first = hull.front();
  Face up{FaceKind::Ray, first, first, RayDirection::Up, std::nullopt};
  if (first.i > 0) up.weight = Weight{Rational(1, first.i), 0};
  poly.faces.push_back(up);
  for (std::size_t k = 0; k + 1 < hull.size(); ++k)
    poly.faces.push_back({FaceKind::Edge, hull[k], hull[k + 1], RayDirection::Up, edge_weight(hull[k], hull[k + 1])});
  const Exponent& last = hull.back();
  Face right{FaceKind::Ray, last, last, RayDirection::Right, std::nullopt};
  if (last.j > 0) right.weight = Weight{0, Rational(1, last.j)};
  poly.faces.push_back(right);
  return poly;
}

NewtonDistance newton_distance(const NewtonPolygon& poly) {
  for (const auto& v : poly.vertices)
    if (v.i == v.j) return {Rational(v.i), Face{FaceKind::Vertex, v, v, RayDirection::Up, std::nullopt}};
  const Exponent& first = poly.vertices.front();
  if (first.i > first.j) return {Rational(first.i), poly.faces.front()};
  const Exponent& last = poly.vertices.back();
  if (last.i < last.j) return {Rational(last.j), poly.faces.back()};
  for (const auto& f : poly.faces) {
    if (f.kind != FaceKind::Edge) continue;
    if (f.start.i < f.start.j && f.end.i > f.end.j) return {1 / (f.weight->k1 + f.weight->k2), f};
  }
  throw Error(ErrorKind::Domain, "bisectrix does not meet the polygon boundary");
}

BivariatePolynomial face_part(const BivariatePolynomial& p, const Face& f) {
  NewtonPolygon poly = build_polygon(taylor_support(p));
  bool incident = std::find(poly.faces.begin(), poly.faces.end(), f) != poly.faces.end();
  if (f.kind == FaceKind::Vertex)
    incident = std::find(poly.vertices.begin(), poly.vertices.end(), f.start) != poly.vertices.end();
  if (!incident) throw Error(ErrorKind::Domain, "face is not a face of the Newton polygon");
  BivariatePolynomial r;
  for (const auto& [e, c] : p.terms())
    if (f.contains(e.i, e.j)) r.set(e.i, e.j, c);
  return r;
}

Rational distance_under_linear(const BivariatePolynomial& p, const LinearMap2& M) {
  return newton_distance(build_polygon(taylor_support(apply_linear(p, M)))).d;
}

}  // namespace nphk
