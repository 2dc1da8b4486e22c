#pragma once

#include "nphk/newton.hpp"
#include "nphk/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nphk {

enum class KindTag {
  D4,
  D,
  E6,
  E7,
  E8,
  CaseBIV,
  CaseC,
  NondegenerateOrRankPositive,
  UnsupportedHeightAbove2,
};

const char* to_string(KindTag tag);

struct SingularityKind {
  KindTag tag = KindTag::D4;
  // D: branch order and order of b0. Rank one: n of the square 2-jet branch.
  std::optional<Order> m, n;
  // E and CaseBIV: orders of the y^0 and y^1 coefficients after the cubic
  // shear; absent when zero to the working truncation.
  std::optional<int> k0, k1;
  int rank = 0;

  static SingularityKind d(Order m, Order n);
  static SingularityKind of(KindTag tag);
  bool supported() const;
  bool non_linearly_adapted() const;
  // D6, D_inf, E7, A6, ... ; the D index is n+1.
  std::string name() const;
  friend bool operator==(const SingularityKind&, const SingularityKind&) = default;
};

struct DNormalForm {
  Order m;
  Rational omega0;               // 0 when m is infinite
  Order n;
  std::optional<Rational> beta0; // absent when n is infinite
  UnivariatePolynomial psi;
  UnivariatePolynomial b0;
  int rank = 0;                  // 1 when the 2-jet is a nonzero square
  bool exact = false;            // psi solves the branch equation exactly
  LinearMap2 normalization;      // original x = M u
  BivariatePolynomial adapted;   // p(M(u1, u2 + psi(u1)))
};

struct Classification {
  SingularityKind kind;
  LinearMap2 normalization;
  UnivariatePolynomial shear;
  BivariatePolynomial adapted;   // coordinates in which the height is read off
  std::optional<DNormalForm> d_form;
  std::vector<std::string> warnings;
};

struct HeightReport {
  Rational h, h_lin;
  int multiplicity = 0;
  bool linearly_adapted = true;
};

int circle_vanishing_order(const BivariatePolynomial& hom);
int rank_at_origin(const BivariatePolynomial& p);
int default_truncation(const BivariatePolynomial& p);

// Branch data of b(x)(u2 - psi(u1))^2 + b0(u1). Accepts rank zero with a
// double real factor of the cubic part, and rank one (square 2-jet).
DNormalForm d_normal_form(const BivariatePolynomial& p, std::optional<int> trunc = std::nullopt);

Classification classify(const BivariatePolynomial& p, std::optional<int> trunc = std::nullopt);
SingularityKind classify_singularity(const BivariatePolynomial& p);

Rational height(const SingularityKind& kind);
Rational linear_height(const SingularityKind& kind);
int multiplicity_mfrak(const Classification& c);
int multiplicity_mfrak(const BivariatePolynomial& p, const SingularityKind& kind);
HeightReport height_report(const Classification& c);

}  // namespace nphk
