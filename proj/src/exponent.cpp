#include "nphk/exponent.hpp"

#include "nphk/error.hpp"

#include <algorithm>

namespace nphk {

namespace {

void check_nla_domain(int m, Order n) {
  if (m < 2) throw Error(ErrorKind::Domain, "m must be at least 2");
  if (!n.is_infinite() && n.value() <= 2 * m + 1)
    throw Error(ErrorKind::Domain, "requires 2m+1 < n, got m=" + std::to_string(m) + ", n=" + n.to_string());
}

// 1/n, with the n = inf limit.
Rational reciprocal(Order n) { return n.is_infinite() ? Rational(0) : Rational(1, n.value()); }

// The two NLA lines in u: first through the origin, second through the p = 1 anchor.
std::pair<ProfileSegment, ProfileSegment> nla_lines(int m, Order n) {
  Rational rn = reciprocal(n);
  ProfileSegment first{5 - Rational(1, 2 * m + 1), 0, 0, Rational(1, 2)};
  ProfileSegment second{6 - (2 * m + 2) * rn, Rational(2 * m + 1) * rn / 2 - Rational(1, 2), 0, Rational(1, 2)};
  return {first, second};
}

}  // namespace

Rational ExponentProfile::evaluate(const Rational& u) const {
  if (u < 0 || u > Rational(1, 2)) throw Error(ErrorKind::Domain, "u outside [0, 1/2]");
  for (const auto& s : segments)
    if (u >= s.u_from && u <= s.u_to) return s.at(u);
  throw Error(ErrorKind::Domain, "profile does not cover u");
}

Rational PiecewiseLinear::operator()(const Rational& x) const {
  if (x < points_.front().first || x > points_.back().first)
    throw Error(ErrorKind::Domain, "point outside the envelope range");
  for (std::size_t k = 0; k + 1 < points_.size(); ++k) {
    const auto& [x0, y0] = points_[k];
    const auto& [x1, y1] = points_[k + 1];
    if (x <= x1) return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
  }
  return points_.back().second;
}

Rational inverse_p_offset(const Rational& p) {
  if (p < 1 || p > 2) throw Error(ErrorKind::Domain, "p must lie in [1, 2], got " + to_string(p));
  return 1 / p - Rational(1, 2);
}

ExponentProfile kp_profile(const SingularityKind& kind) {
  ExponentProfile prof;
  prof.kind = kind;
  prof.h = height(kind);
  prof.h_lin = linear_height(kind);
  if (kind.non_linearly_adapted()) {
    auto [first, second] = nla_lines(kind.m->value(), *kind.n);
    Rational cross = -second.intercept / (second.slope - first.slope);
    first.u_to = cross;
    second.u_from = cross;
    prof.segments = {first, second};
  } else {
    prof.segments = {{6 - 2 / prof.h, 0, 0, Rational(1, 2)}};
  }
  return prof;
}

Rational kp_point(const SingularityKind& kind, const Rational& p) {
  Rational u = inverse_p_offset(p);
  if (kind.non_linearly_adapted()) {
    auto [first, second] = nla_lines(kind.m->value(), *kind.n);
    return std::max(first.at(u), second.at(u));
  }
  return (6 - 2 / height(kind)) * u;
}

Threshold sugimoto_q_threshold(int nu, const Rational& gamma, const Rational& q) {
  if (q < 2) throw Error(ErrorKind::Domain, "q must be at least 2");
  return {(2 * q - 1) / (2 * q), nu - gamma - 1 / q};
}

Rational sugimoto_inf_threshold(int nu, const Rational& gamma, const Rational& p) {
  return (2 * nu - 2 * gamma) * inverse_p_offset(p);
}

PiecewiseLinear interpolation_envelope(std::vector<BoundednessAnchor> anchors) {
  if (anchors.size() < 2) throw Error(ErrorKind::Domain, "need at least two anchors");
  std::sort(anchors.begin(), anchors.end(), [](const auto& a, const auto& b) { return a.inv_p < b.inv_p; });
  for (std::size_t k = 0; k + 1 < anchors.size(); ++k)
    if (anchors[k].inv_p == anchors[k + 1].inv_p)
      throw Error(ErrorKind::Domain, "duplicate anchor at 1/p = " + to_string(anchors[k].inv_p));
  // Lower convex hull; collinear middle points are dropped.
  std::vector<std::pair<Rational, Rational>> hull;
  for (const auto& a : anchors) {
    while (hull.size() >= 2) {
      const auto& [x0, y0] = hull[hull.size() - 2];
      const auto& [x1, y1] = hull.back();
      if ((x1 - x0) * (a.k - y0) - (y1 - y0) * (a.inv_p - x0) <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.emplace_back(a.inv_p, a.k);
  }
  return PiecewiseLinear(std::move(hull));
}

std::vector<BoundednessAnchor> nla_anchors(int m, Order n) {
  check_nla_domain(m, n);
  Threshold randol = sugimoto_q_threshold(3, Rational(1, 2) + Rational(1, m + 1), Rational(2 * m + 2));
  Rational h = height(SingularityKind::d(m, n));
  return {
      {Rational(1, 2), 0, AnchorSource::TrivialL2},
      {randol.inv_p, randol.k, AnchorSource::Sugi1},
      {1, sugimoto_inf_threshold(3, 1 / h, 1), AnchorSource::Sugi2},
  };
}

bool verify_nla_identity(int m, Order n) {
  check_nla_domain(m, n);
  PiecewiseLinear env = interpolation_envelope(nla_anchors(m, n));
  SingularityKind kind = SingularityKind::d(m, n);
  std::vector<Rational> grid;
  constexpr int kSteps = 240;
  for (int j = 0; j <= kSteps; ++j) grid.push_back(Rational(1, 2) + Rational(j, 2 * kSteps));
  for (const auto& s : kp_profile(kind).segments) grid.push_back(s.u_from + Rational(1, 2));
  for (const auto& a : env.breakpoints()) grid.push_back(a.first);
  for (const auto& x : grid)
    if (kp_point(kind, 1 / x) != env(x)) return false;
  return true;
}

Rational knapp_exponent(const Rational& kappa1, const Rational& kappa2, const Rational& p, const Rational& k) {
  if (kappa1 < 0 || kappa2 < 0) throw Error(ErrorKind::Domain, "weights must be nonnegative");
  return 2 * (3 - kappa1 - kappa2) * inverse_p_offset(p) - k;
}

Rational knapp_exponent_nla(int m, Order n, const Rational& p, const Rational& k) {
  check_nla_domain(m, n);
  return nla_lines(m, n).second.at(inverse_p_offset(p)) - k;
}

}  // namespace nphk
