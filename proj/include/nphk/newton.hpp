#pragma once

#include "nphk/polynomial.hpp"

#include <optional>
#include <vector>

namespace nphk {

using LatticeSet = std::vector<Exponent>;

// Normal (k1, k2) of a supporting line k1 t1 + k2 t2 = 1.
struct Weight {
  Rational k1, k2;
  friend bool operator==(const Weight&, const Weight&) = default;
};

enum class FaceKind { Vertex, Edge, Ray };
enum class RayDirection { Up, Right };

struct Face {
  FaceKind kind = FaceKind::Vertex;
  Exponent start;                       // vertex, edge start, or ray origin
  Exponent end;                         // edge end (larger t1); unused otherwise
  RayDirection direction = RayDirection::Up;
  std::optional<Weight> weight;         // absent for a vertex and for a ray on an axis line through 0

  bool contains(const Rational& t1, const Rational& t2) const;
  friend bool operator==(const Face&, const Face&) = default;
};

struct NewtonPolygon {
  std::vector<Exponent> vertices;  // t1 ascending, t2 descending
  // Vertical ray, compact edges left to right, horizontal ray.
  std::vector<Face> faces;
};

struct NewtonDistance {
  Rational d;
  Face principal;
};

// Exponents of the Taylor support; throws NotCriticalAtOrigin when the
// constant or a linear term is present.
LatticeSet taylor_support(const BivariatePolynomial& p);
NewtonPolygon build_polygon(const LatticeSet& s);
NewtonDistance newton_distance(const NewtonPolygon& poly);
BivariatePolynomial face_part(const BivariatePolynomial& p, const Face& f);
Rational distance_under_linear(const BivariatePolynomial& p, const LinearMap2& M);

}  // namespace nphk
