#pragma once

#include <cmath>
#include <cstdint>

namespace nphk::detail {

// sin and cos together for |x| up to about 1e6: three-part Cody-Waite
// reduction by pi/2 and the Cephes minimax polynomials on [-pi/4, pi/4].
// Branch free, so row loops vectorize.
inline void fast_sincos(double x, double& s, double& c) {
  constexpr double kTwoOverPi = 0.63661977236758134308;
  constexpr double P1 = 1.57079625129699707031;
  constexpr double P2 = 7.54978941586159635336e-8;
  constexpr double P3 = 5.39030285815811905290e-15;
  double q = std::nearbyint(x * kTwoOverPi);
  double r = ((x - q * P1) - q * P2) - q * P3;
  double z = r * r;
  double ps = 1.58962301576546568060e-10;
  ps = ps * z - 2.50507477628578072866e-8;
  ps = ps * z + 2.75573136213857245213e-6;
  ps = ps * z - 1.98412698295895385996e-4;
  ps = ps * z + 8.33333333332211858878e-3;
  ps = ps * z - 1.66666666666666307295e-1;
  double sr = r + r * z * ps;
  double pc = -1.13585365213876817300e-11;
  pc = pc * z + 2.08757008419747316778e-9;
  pc = pc * z - 2.75573141792967388112e-7;
  pc = pc * z + 2.48015872888517045348e-5;
  pc = pc * z - 1.38888888888730564116e-3;
  pc = pc * z + 4.16666666666665929218e-2;
  double cr = 1.0 - 0.5 * z + z * z * pc;
  auto n = static_cast<std::int64_t>(q) & 3;
  double a = (n & 1) ? cr : sr;   // sin up to sign
  double b = (n & 1) ? sr : cr;   // cos up to sign
  s = (n & 2) ? -a : a;
  c = ((n + 1) & 2) ? -b : b;
}

}  // namespace nphk::detail
