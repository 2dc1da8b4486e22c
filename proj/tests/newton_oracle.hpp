#pragma once

#include "nphk/newton.hpp"

#include <algorithm>

namespace nphk::test {

// Newton distance as the largest bisectrix intercept over all supporting lines
// with nonnegative normal: lines through two support points, and the
// horizontal and vertical lines through the lowest and leftmost points.
inline Rational distance_by_supporting_lines(const LatticeSet& s) {
  int min_i = s.front().i, min_j = s.front().j;
  for (const auto& e : s) {
    min_i = std::min(min_i, e.i);
    min_j = std::min(min_j, e.j);
  }
  // The polygon lies in t1 >= min_i and t2 >= min_j.
  Rational best = std::max(min_i, min_j);
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = 0; b < s.size(); ++b) {
      const auto& p = s[a];
      const auto& q = s[b];
      if (!(p.i < q.i && p.j > q.j)) continue;
      // Line through p and q: (p.j - q.j) t1 + (q.i - p.i) t2 = c.
      Rational n1 = p.j - q.j, n2 = q.i - p.i, c = n1 * p.i + n2 * p.j;
      bool supporting = std::all_of(s.begin(), s.end(), [&](const Exponent& e) { return n1 * e.i + n2 * e.j >= c; });
      if (supporting) best = std::max(best, Rational(c / (n1 + n2)));
    }
  }
  return best;
}

// Newton distance as the smallest t such that (t, t) dominates a convex
// combination of two support points.
inline Rational distance_by_dominated_combinations(const LatticeSet& s) {
  auto cost = [](const Exponent& p, const Exponent& q, const Rational& l) {
    Rational u = l * p.i + (1 - l) * q.i;
    Rational v = l * p.j + (1 - l) * q.j;
    return std::max(u, v);
  };
  Rational best = -1;
  for (const auto& p : s) {
    for (const auto& q : s) {
      Rational t = std::min(cost(p, q, 0), cost(p, q, 1));
      // Crossing of the two coordinates, l p + (1 - l) q on the bisectrix.
      Rational den = Rational(p.i - q.i) - Rational(p.j - q.j);
      if (den != 0) {
        Rational l = Rational(q.j - q.i) / den;
        if (l >= 0 && l <= 1) t = std::min(t, cost(p, q, l));
      }
      if (best < 0 || t < best) best = t;
    }
  }
  return best;
}

}  // namespace nphk::test
