#include "nphk/oscint.hpp"

#include "nphk/classify.hpp"
#include "nphk/error.hpp"
#include "nphk/fastmath.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <thread>

namespace nphk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double ipow(double base, int k) {
  double r = 1.0;
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

// Phase as dense rows: rows[j][i] is the coefficient of x^i y^j.
struct CompiledPhase {
  std::vector<std::vector<double>> rows;

  explicit CompiledPhase(const BivariatePolynomial& p) {
    for (const auto& [e, c] : p.terms()) {
      if (static_cast<int>(rows.size()) <= e.j) rows.resize(e.j + 1);
      auto& row = rows[e.j];
      if (static_cast<int>(row.size()) <= e.i) row.resize(e.i + 1, 0.0);
      row[e.i] = to_double(c);
    }
  }

  // c[j] = coefficient of y^j at this x.
  void row_values(double x, std::vector<double>& c) const {
    c.assign(rows.size(), 0.0);
    for (std::size_t j = 0; j < rows.size(); ++j) {
      double acc = 0.0;
      for (auto it = rows[j].rbegin(); it != rows[j].rend(); ++it) acc = acc * x + *it;
      c[j] = acc;
    }
  }

  static double horner(const std::vector<double>& c, double y) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * y + *it;
    return acc;
  }

  double eval(double x, double y) const {
    std::vector<double> c;
    row_values(x, c);
    return horner(c, y);
  }
};

void validate(const AmplitudeSpec& amp) {
  if (!(amp.radius > 0) || !std::isfinite(amp.radius)) throw Error(ErrorKind::Domain, "amplitude radius must be positive");
  if (amp.order < 2) throw Error(ErrorKind::Domain, "bump order must be at least 2");
}

// Half-length of the support slice at abscissa x.
double half_chord(const AmplitudeSpec& amp, double x) {
  if (amp.profile == BumpProfile::Product) return amp.radius;
  double r2 = amp.radius * amp.radius - x * x;
  return r2 > 0 ? std::sqrt(r2) : 0.0;
}

// Lattice indices k with |(k + off) h| < half.
std::pair<long, long> index_range(double half, double h, double off) {
  long lo = static_cast<long>(std::ceil(-half / h - off));
  long hi = static_cast<long>(std::floor(half / h - off));
  return {lo, hi};
}

// Sampled maxima of |d phi/dx| and |d phi/dy| over the support.
std::pair<double, double> gradient_bounds(const BivariatePolynomial& phi, const AmplitudeSpec& amp) {
  CompiledPhase px(phi.partial_x()), py(phi.partial_y());
  constexpr int kSamples = 129;
  double gx = 0.0, gy = 0.0;
  for (int a = 0; a < kSamples; ++a) {
    double x = amp.radius * (-1.0 + 2.0 * a / (kSamples - 1));
    for (int b = 0; b < kSamples; ++b) {
      double y = amp.radius * (-1.0 + 2.0 * b / (kSamples - 1));
      if (amp.profile == BumpProfile::Radial && x * x + y * y > amp.radius * amp.radius) continue;
      gx = std::max(gx, std::abs(px.eval(x, y)));
      gy = std::max(gy, std::abs(py.eval(x, y)));
    }
  }
  return {gx, gy};
}

// Spacing resolving phase gradient g at the requested density.
double base_spacing(double g, double lambda, const AmplitudeSpec& amp, const QuadratureOptions& opts) {
  double cap = amp.radius / opts.min_nodes_per_radius;
  if (g <= 0) return cap;
  return std::min(cap, kTwoPi / (opts.points_per_wave * lambda * g));
}

// Runs body(k) for k in [0, count) over the worker pool.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (workers == 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < count; k += workers) body(k);
    });
  for (auto& t : pool) t.join();
}

struct LatticeResult {
  std::complex<double> sum;
  std::size_t nodes = 0;
};

LatticeResult lattice_sum(const CompiledPhase& P, const AmplitudeSpec& amp, double lambda,
                          std::pair<double, double> s, double hx, double hy, double off, unsigned workers) {
  auto [lo, hi] = index_range(amp.radius, hx, off);
  std::size_t nrows = hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0;
  std::vector<std::complex<double>> rows(nrows);
  std::vector<std::size_t> counts(nrows);
  parallel_for(nrows, workers, [&](std::size_t r) {
    double x = (static_cast<double>(lo + static_cast<long>(r)) + off) * hx;
    std::vector<double> c;
    P.row_values(x, c);
    auto [klo, khi] = index_range(half_chord(amp, x), hy, off);
    double re = 0.0, im = 0.0;
    for (long k = klo; k <= khi; ++k) {
      double y = (static_cast<double>(k) + off) * hy;
      double w = amp.weight(x, y);
      if (w == 0.0) continue;
      double ph = lambda * (CompiledPhase::horner(c, y) + s.first * x + s.second * y);
      double sn, cs;
      detail::fast_sincos(ph, sn, cs);
      re += w * cs;
      im += w * sn;
    }
    rows[r] = {re, im};
    counts[r] = khi >= klo ? static_cast<std::size_t>(khi - klo + 1) : 0;
  });
  LatticeResult out;
  for (std::size_t r = 0; r < nrows; ++r) {
    out.sum += rows[r];
    out.nodes += counts[r];
  }
  out.sum *= hx * hy;
  return out;
}

}  // namespace

double AmplitudeSpec::weight(double x, double y) const {
  double R2 = radius * radius;
  if (profile == BumpProfile::Radial) {
    double t = 1.0 - (x * x + y * y) / R2;
    return t > 0 ? ipow(t, order) : 0.0;
  }
  double tx = 1.0 - x * x / R2, ty = 1.0 - y * y / R2;
  return tx > 0 && ty > 0 ? ipow(tx * ty, order) : 0.0;
}

double AmplitudeSpec::integral() const {
  if (profile == BumpProfile::Radial) return std::numbers::pi * radius * radius / (order + 1);
  double one = radius * std::sqrt(std::numbers::pi) * std::tgamma(order + 1.0) / std::tgamma(order + 1.5);
  return one * one;
}

unsigned worker_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("NPHK_WORKERS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<std::pair<double, double>> stray_critical_points(const BivariatePolynomial& phi, const AmplitudeSpec& amp) {
  validate(amp);
  BivariatePolynomial dx = phi.partial_x(), dy = phi.partial_y();
  CompiledPhase P(phi), Px(dx), Py(dy), Pxx(dx.partial_x()), Pxy(dx.partial_y()), Pyy(dy.partial_y());
  constexpr int kGrid = 161;
  const double R = amp.radius, h = 2.0 * R / (kGrid - 1);
  std::vector<double> g2(kGrid * kGrid, -1.0);
  double gmax = 0.0, fmax = 0.0;
  for (int a = 0; a < kGrid; ++a)
    for (int b = 0; b < kGrid; ++b) {
      double x = -R + a * h, y = -R + b * h;
      if (amp.weight(x, y) <= 0.0) continue;
      double gx = Px.eval(x, y), gy = Py.eval(x, y);
      g2[a * kGrid + b] = gx * gx + gy * gy;
      gmax = std::max(gmax, std::sqrt(g2[a * kGrid + b]));
      fmax = std::max(fmax, std::abs(P.eval(x, y)));
    }
  double f0 = P.eval(0.0, 0.0);
  std::vector<std::pair<double, double>> found;
  for (int a = 1; a + 1 < kGrid; ++a)
    for (int b = 1; b + 1 < kGrid; ++b) {
      double v = g2[a * kGrid + b];
      if (v < 0) continue;
      bool minimum = true;
      for (int da = -1; da <= 1 && minimum; ++da)
        for (int db = -1; db <= 1; ++db) {
          double w = g2[(a + da) * kGrid + b + db];
          if ((da || db) && (w < 0 || w < v)) {
            minimum = false;
            break;
          }
        }
      if (!minimum) continue;
      double x = -R + a * h, y = -R + b * h;
      if (std::hypot(x, y) < 2.0 * h) continue;
      // Damped Newton on grad phi = 0.
      for (int it = 0; it < 60; ++it) {
        double gx = Px.eval(x, y), gy = Py.eval(x, y);
        double hxx = Pxx.eval(x, y), hxy = Pxy.eval(x, y), hyy = Pyy.eval(x, y);
        double mu = 1e-12 * (1.0 + hxx * hxx + hyy * hyy);
        double a11 = hxx * hxx + hxy * hxy + mu, a12 = hxx * hxy + hxy * hyy, a22 = hxy * hxy + hyy * hyy + mu;
        double r1 = hxx * gx + hxy * gy, r2 = hxy * gx + hyy * gy;
        double det = a11 * a22 - a12 * a12;
        if (det == 0) break;
        x -= (a22 * r1 - a12 * r2) / det;
        y -= (a11 * r2 - a12 * r1) / det;
      }
      double g = std::hypot(Px.eval(x, y), Py.eval(x, y));
      if (!(g <= 1e-9 * (1.0 + gmax)) || amp.weight(x, y) <= 0.0 || std::hypot(x, y) < 1e-6 * R) continue;
      if (std::abs(P.eval(x, y) - f0) <= 1e-8 * (1.0 + fmax)) continue;
      bool duplicate = std::any_of(found.begin(), found.end(),
                                   [&](const auto& q) { return std::hypot(q.first - x, q.second - y) < 1e-6 * R; });
      if (!duplicate) found.emplace_back(x, y);
    }
  return found;
}

void check_amplitude(const BivariatePolynomial& phi, const AmplitudeSpec& amp) {
  auto stray = stray_critical_points(phi, amp);
  if (!stray.empty())
    throw Error(ErrorKind::Domain, "amplitude support contains another critical point near (" +
                                       std::to_string(stray.front().first) + ", " +
                                       std::to_string(stray.front().second) + "); reduce --radius");
}

OscillatoryValue eval_oscillatory(const BivariatePolynomial& phi, const AmplitudeSpec& amp, double lambda,
                                  std::pair<double, double> s, const QuadratureOptions& opts) {
  validate(amp);
  if (!(lambda > 0)) throw Error(ErrorKind::Domain, "lambda must be positive");
  CompiledPhase P(phi);
  auto [gx, gy] = gradient_bounds(phi, amp);
  gx = 1.1 * gx + std::abs(s.first);
  gy = 1.1 * gy + std::abs(s.second);
  double hx = base_spacing(gx, lambda, amp, opts), hy = base_spacing(gy, lambda, amp, opts);
  unsigned workers = worker_count(opts.workers);
  OscillatoryValue best;
  for (int ref = 0; ref <= opts.max_refinements; ++ref) {
    LatticeResult a = lattice_sum(P, amp, lambda, s, hx, hy, 0.0, workers);
    LatticeResult b = lattice_sum(P, amp, lambda, s, hx, hy, 0.5, workers);
    best.value = 0.5 * (a.sum + b.sum);
    best.error_estimate = 0.5 * std::abs(a.sum - b.sum);
    best.nodes = a.nodes + b.nodes;
    if (best.error_estimate <= opts.rtol * std::abs(best.value) + opts.atol) return best;
    hx *= 0.5;
    hy *= 0.5;
  }
  throw Error(ErrorKind::QuadratureNotConverged,
              "quadrature did not converge at lambda=" + std::to_string(lambda) +
                  " (estimated error " + std::to_string(best.error_estimate) + ")");
}

OscillatoryValue eval_oscillatory_1d(const UnivariatePolynomial& phi, double radius, int order, double lambda,
                                     double s, const QuadratureOptions& opts) {
  AmplitudeSpec amp{radius, BumpProfile::Product, order};
  validate(amp);
  double g = 0.0;
  UnivariatePolynomial d = phi.derivative();
  for (int a = 0; a <= 256; ++a) g = std::max(g, std::abs(d.evaluate(radius * (-1.0 + a / 128.0))));
  g = 1.1 * g + std::abs(s);
  double h = base_spacing(g, lambda, amp, opts);
  auto sum = [&](double off) {
    auto [lo, hi] = index_range(radius, h, off);
    std::complex<double> acc;
    for (long k = lo; k <= hi; ++k) {
      double x = (static_cast<double>(k) + off) * h;
      double t = 1.0 - x * x / (radius * radius);
      if (t <= 0) continue;
      double ph = lambda * (phi.evaluate(x) + s * x);
      acc += ipow(t, order) * std::complex<double>(std::cos(ph), std::sin(ph));
    }
    return acc * h;
  };
  OscillatoryValue best;
  for (int ref = 0; ref <= opts.max_refinements; ++ref) {
    std::complex<double> a = sum(0.0), b = sum(0.5);
    best.value = 0.5 * (a + b);
    best.error_estimate = 0.5 * std::abs(a - b);
    if (best.error_estimate <= opts.rtol * std::abs(best.value) + opts.atol) return best;
    h *= 0.5;
  }
  throw Error(ErrorKind::QuadratureNotConverged, "1-D quadrature did not converge at lambda=" + std::to_string(lambda));
}

std::vector<double> geometric_grid(double lmin, double lmax, double ratio) {
  if (!(lmin > 0) || !(lmax >= lmin) || !(ratio > 1)) throw Error(ErrorKind::Domain, "bad geometric grid");
  std::vector<double> out;
  for (double l = lmin; l <= lmax * (1 + 1e-12); l *= ratio) out.push_back(l);
  return out;
}

DecayFit fit_decay(const BivariatePolynomial& phi, const AmplitudeSpec& amp, const std::vector<double>& lambdas,
                   std::pair<double, double> s, bool with_log, const QuadratureOptions& opts) {
  check_amplitude(phi, amp);
  for (std::size_t k = 0; k + 1 < lambdas.size(); ++k)
    if (!(lambdas[k] < lambdas[k + 1])) throw Error(ErrorKind::Domain, "lambda grid must be strictly increasing");
  DecayFit fit;
  fit.log_correction = with_log;
  for (double l : lambdas) {
    if (!(l > 1)) throw Error(ErrorKind::Domain, "lambda grid must lie above 1");
    try {
      OscillatoryValue v = eval_oscillatory(phi, amp, l, s, opts);
      fit.lambdas.push_back(l);
      fit.values.push_back(v.value);
      fit.magnitudes.push_back(std::abs(v.value));
      fit.quadrature_error.push_back(v.error_estimate);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::QuadratureNotConverged) throw;
      fit.failures.emplace_back(l, e.what());
    }
  }
  const std::size_t cols = with_log ? 3 : 2;
  if (fit.lambdas.size() < cols + 1) throw Error(ErrorKind::DegenerateFit, "too few converged points for a fit");
  Eigen::MatrixXd A(fit.lambdas.size(), cols);
  Eigen::VectorXd b(fit.lambdas.size());
  for (std::size_t k = 0; k < fit.lambdas.size(); ++k) {
    if (!(fit.magnitudes[k] > 1e-300)) throw Error(ErrorKind::DegenerateFit, "|I| underflows at some lambda");
    double L = std::log(fit.lambdas[k]);
    A(k, 0) = 1.0;
    A(k, 1) = -L;
    if (with_log) A(k, 2) = std::log(L);
    b(k) = std::log(fit.magnitudes[k]);
  }
  Eigen::VectorXd coef = A.colPivHouseholderQr().solve(b);
  fit.gamma_hat = coef(1);
  if (with_log) fit.log_coefficient = coef(2);
  fit.residual = std::sqrt((A * coef - b).squaredNorm() / static_cast<double>(fit.lambdas.size()));
  if (!std::isfinite(fit.gamma_hat)) throw Error(ErrorKind::DegenerateFit, "fit produced a non-finite exponent");
  return fit;
}

void check_randol_preconditions(const BivariatePolynomial& phi, int m) {
  if (m < 1) throw Error(ErrorKind::Domain, "m must be positive");
  DNormalForm f = d_normal_form(phi);
  if (f.m != Order(m)) throw Error(ErrorKind::Domain, "phase has branch order m=" + f.m.to_string() + ", not " + std::to_string(m));
  if (!f.n.is_infinite() && f.n.value() <= 2 * m + 1)
    throw Error(ErrorKind::Domain, "requires 2m+1 < n, got n=" + f.n.to_string());
}

double randol_maximal(const BivariatePolynomial& phi, const AmplitudeSpec& amp, int m, std::pair<double, double> s,
                      const std::vector<double>& lambdas, const QuadratureOptions& opts, bool enforce_preconditions) {
  if (enforce_preconditions) check_randol_preconditions(phi, m);
  check_amplitude(phi, amp);
  double gamma = 0.5 + 1.0 / (m + 1);
  QuadratureOptions o = opts;
  if (o.atol == 0.0) o.atol = 1e-7 * amp.integral();
  double best = 0.0;
  for (double l : lambdas) {
    if (!(l > 1)) throw Error(ErrorKind::Domain, "lambda grid must lie above 1");
    best = std::max(best, std::pow(l, gamma) * std::abs(eval_oscillatory(phi, amp, l, s, o).value));
  }
  return best;
}

std::vector<std::complex<double>> eval_oscillatory_grid(const BivariatePolynomial& phi, const AmplitudeSpec& amp,
                                                        double lambda, const std::vector<double>& s_axis,
                                                        const QuadratureOptions& opts, double* max_error) {
  using CMat = Eigen::MatrixXcd;
  validate(amp);
  if (!(lambda > 0)) throw Error(ErrorKind::Domain, "lambda must be positive");
  CompiledPhase P(phi);
  double smax = 0.0;
  for (double v : s_axis) smax = std::max(smax, std::abs(v));
  auto [gx, gy] = gradient_bounds(phi, amp);
  double hx = base_spacing(1.1 * gx + smax, lambda, amp, opts);
  double hy = base_spacing(1.1 * gy + smax, lambda, amp, opts);
  const Eigen::Index ns = static_cast<Eigen::Index>(s_axis.size());
  unsigned workers = worker_count(opts.workers);

  auto lattice = [&](double off) {
    auto [xlo, xhi] = index_range(amp.radius, hx, off);
    auto [ylo, yhi] = index_range(amp.radius, hy, off);
    const Eigen::Index ny = yhi - ylo + 1;
    std::vector<double> Y(ny);
    for (Eigen::Index k = 0; k < ny; ++k) Y[k] = (static_cast<double>(ylo + k) + off) * hy;
    CMat Ey(ny, ns);
    for (Eigen::Index k = 0; k < ny; ++k)
      for (Eigen::Index b = 0; b < ns; ++b) Ey(k, b) = std::polar(1.0, lambda * s_axis[b] * Y[k]);
    const long nx = xhi - xlo + 1;
    constexpr long kBlock = 128;
    const std::size_t nblocks = static_cast<std::size_t>((nx + kBlock - 1) / kBlock);
    std::vector<CMat> parts(nblocks);
    parallel_for(nblocks, workers, [&](std::size_t blk) {
      long r0 = static_cast<long>(blk) * kBlock, rn = std::min(kBlock, nx - r0);
      CMat G = CMat::Zero(rn, ny);
      CMat Ex(ns, rn);
      std::vector<double> c;
      for (long r = 0; r < rn; ++r) {
        double x = (static_cast<double>(xlo + r0 + r) + off) * hx;
        for (Eigen::Index a = 0; a < ns; ++a) Ex(a, r) = std::polar(1.0, lambda * s_axis[a] * x);
        P.row_values(x, c);
        double half = half_chord(amp, x);
        for (Eigen::Index k = 0; k < ny; ++k) {
          if (std::abs(Y[k]) >= half) continue;
          double w = amp.weight(x, Y[k]);
          if (w == 0.0) continue;
          G(r, k) = std::polar(w, lambda * CompiledPhase::horner(c, Y[k]));
        }
      }
      parts[blk] = Ex * (G * Ey);
    });
    CMat total = CMat::Zero(ns, ns);
    for (const auto& p : parts) total += p;
    return CMat(total * (hx * hy));
  };

  double atol = opts.atol > 0 ? opts.atol : 1e-7 * amp.integral();
  for (int ref = 0; ref <= opts.max_refinements; ++ref) {
    CMat a = lattice(0.0), b = lattice(0.5);
    CMat mid = 0.5 * (a + b);
    double worst = 0.0;
    bool ok = true;
    for (Eigen::Index i = 0; i < ns; ++i)
      for (Eigen::Index j = 0; j < ns; ++j) {
        double err = 0.5 * std::abs(a(i, j) - b(i, j));
        worst = std::max(worst, err);
        if (err > opts.rtol * std::abs(mid(i, j)) + atol) ok = false;
      }
    if (ok) {
      if (max_error) *max_error = worst;
      std::vector<std::complex<double>> out(static_cast<std::size_t>(ns * ns));
      for (Eigen::Index i = 0; i < ns; ++i)
        for (Eigen::Index j = 0; j < ns; ++j) out[static_cast<std::size_t>(i * ns + j)] = mid(i, j);
      return out;
    }
    hx *= 0.5;
    hy *= 0.5;
  }
  throw Error(ErrorKind::QuadratureNotConverged, "grid quadrature did not converge at lambda=" + std::to_string(lambda));
}

RandolScan randol_lq_scan(const BivariatePolynomial& phi, const AmplitudeSpec& amp, int m, const ScanOptions& grid,
                          const std::vector<double>& q_list, const QuadratureOptions& opts, bool enforce_preconditions) {
  if (enforce_preconditions) check_randol_preconditions(phi, m);
  check_amplitude(phi, amp);
  if (grid.points < 2 || grid.levels < 1 || !(grid.half_width > 0))
    throw Error(ErrorKind::Domain, "bad scan grid");
  const double gamma = 0.5 + 1.0 / (m + 1);
  RandolScan scan;
  scan.m = m;
  for (int level = 0; level < grid.levels; ++level) {
    RandolLevel L;
    L.points = (grid.points - 1) * (1 << level) + 1;
    L.spacing = 2.0 * grid.half_width / (L.points - 1);
    for (int a = 0; a < L.points; ++a) L.s_axis.push_back(-grid.half_width + a * L.spacing);
    // Grid anchored at the top value so that each level contains the previous one.
    double top = grid.lambda_max * (1 << level);
    for (double l = top; l >= grid.lambda_min * (1 - 1e-12); l /= grid.lambda_ratio) L.lambdas.push_back(l);
    std::reverse(L.lambdas.begin(), L.lambdas.end());
    L.M.assign(static_cast<std::size_t>(L.points) * L.points, 0.0);
    for (double l : L.lambdas) {
      double err = 0.0;
      auto I = eval_oscillatory_grid(phi, amp, l, L.s_axis, opts, &err);
      L.max_quadrature_error = std::max(L.max_quadrature_error, err);
      double scale = std::pow(l, gamma);
      for (std::size_t k = 0; k < I.size(); ++k) L.M[k] = std::max(L.M[k], scale * std::abs(I[k]));
    }
    scan.levels.push_back(std::move(L));
  }
  for (double q : q_list) {
    RandolQ r;
    r.q = q;
    for (const auto& L : scan.levels) {
      double sum = 0.0;
      for (double v : L.M) sum += std::pow(v, q);
      r.sums.push_back(sum * L.spacing * L.spacing);
    }
    r.ratio = r.sums.size() >= 2 ? r.sums.back() / r.sums[r.sums.size() - 2] : 1.0;
    scan.q_report.push_back(r);
  }
  return scan;
}

}  // namespace nphk
