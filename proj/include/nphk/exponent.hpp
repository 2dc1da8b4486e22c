#pragma once

#include "nphk/classify.hpp"

#include <utility>
#include <vector>

namespace nphk {

// All profiles are functions of u = 1/p - 1/2 on [0, 1/2].
struct ProfileSegment {
  Rational slope, intercept;
  Rational u_from, u_to;
  Rational at(const Rational& u) const { return slope * u + intercept; }
};

struct ExponentProfile {
  SingularityKind kind;
  Rational h, h_lin;
  std::vector<ProfileSegment> segments;
  Rational evaluate(const Rational& u) const;
};

enum class AnchorSource { Sugi1, Sugi2, TrivialL2 };

struct BoundednessAnchor {
  Rational inv_p, k;
  AnchorSource source = AnchorSource::TrivialL2;
};

struct Threshold {
  Rational inv_p, k;
};

class PiecewiseLinear {
 public:
  explicit PiecewiseLinear(std::vector<std::pair<Rational, Rational>> breakpoints)
      : points_(std::move(breakpoints)) {}
  const std::vector<std::pair<Rational, Rational>>& breakpoints() const { return points_; }
  Rational operator()(const Rational& x) const;

 private:
  std::vector<std::pair<Rational, Rational>> points_;
};

Rational inverse_p_offset(const Rational& p);  // 1/p - 1/2, p checked in [1, 2]

Rational kp_point(const SingularityKind& kind, const Rational& p);
ExponentProfile kp_profile(const SingularityKind& kind);

Threshold sugimoto_q_threshold(int nu, const Rational& gamma, const Rational& q);
Rational sugimoto_inf_threshold(int nu, const Rational& gamma, const Rational& p);
PiecewiseLinear interpolation_envelope(std::vector<BoundednessAnchor> anchors);

// Anchors used for the non-linearly-adapted bound: the L2 point, the Randol
// L^(2m+2) point and the p = 1 point.
std::vector<BoundednessAnchor> nla_anchors(int m, Order n);
bool verify_nla_identity(int m, Order n);

Rational knapp_exponent(const Rational& kappa1, const Rational& kappa2, const Rational& p, const Rational& k);
Rational knapp_exponent_nla(int m, Order n, const Rational& p, const Rational& k);

}  // namespace nphk
