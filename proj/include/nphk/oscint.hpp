#pragma once

#include "nphk/polynomial.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace nphk {

enum class BumpProfile {
  Radial,   // (1 - r^2/R^2)^order on the disk
  Product,  // prod (1 - x_i^2/R^2)^order on the square
};

struct AmplitudeSpec {
  double radius = 1.0;
  BumpProfile profile = BumpProfile::Radial;
  int order = 8;

  double weight(double x, double y) const;
  // Integral of the bump over the plane (closed form).
  double integral() const;
};

struct QuadratureOptions {
  double points_per_wave = 1.25;
  double rtol = 1e-3;
  double atol = 0.0;           // absolute floor added to rtol * |I|
  int max_refinements = 3;     // each refinement halves the spacing
  int min_nodes_per_radius = 32;
  unsigned workers = 0;        // 0: NPHK_WORKERS or hardware concurrency
};

struct OscillatoryValue {
  std::complex<double> value;
  double error_estimate = 0.0;
  std::size_t nodes = 0;
};

unsigned worker_count(unsigned requested = 0);

// Numerical critical points of phi inside the support with a critical value
// different from phi(0). Points on a critical curve through the origin share
// its critical value and are not reported.
std::vector<std::pair<double, double>> stray_critical_points(const BivariatePolynomial& phi, const AmplitudeSpec& amp);
// Throws Domain if stray_critical_points is nonempty or the spec is invalid.
void check_amplitude(const BivariatePolynomial& phi, const AmplitudeSpec& amp);

// I(lambda, s) = integral of exp(i lambda (phi(x) + s.x)) g(x) dx. The error
// estimate compares the lattice sum with its half-step shifted copy.
// Throws QuadratureNotConverged when refinements are exhausted.
OscillatoryValue eval_oscillatory(const BivariatePolynomial& phi, const AmplitudeSpec& amp, double lambda,
                                  std::pair<double, double> s = {0.0, 0.0}, const QuadratureOptions& opts = {});

// 1-D analogue for a univariate phase with the 1-D factor of the product bump.
OscillatoryValue eval_oscillatory_1d(const UnivariatePolynomial& phi, double radius, int order, double lambda,
                                     double s = 0.0, const QuadratureOptions& opts = {});

std::vector<double> geometric_grid(double lmin, double lmax, double ratio = 2.0);

struct DecayFit {
  std::vector<double> lambdas;
  std::vector<std::complex<double>> values;
  std::vector<double> magnitudes;
  std::vector<double> quadrature_error;
  std::vector<std::pair<double, std::string>> failures;  // lambda, reason
  double gamma_hat = 0.0;
  double log_coefficient = 0.0;  // coefficient of log log lambda when fitted
  bool log_correction = false;
  double residual = 0.0;         // RMS of the log-magnitude residuals
};

DecayFit fit_decay(const BivariatePolynomial& phi, const AmplitudeSpec& amp, const std::vector<double>& lambdas,
                   std::pair<double, double> s = {0.0, 0.0}, bool with_log = false, const QuadratureOptions& opts = {});

// Branch order m and 2m+1 < n are required of phi; throws Domain otherwise.
void check_randol_preconditions(const BivariatePolynomial& phi, int m);

// Max over the grid of lambda^(1/2 + 1/(m+1)) |I(lambda, s)|.
double randol_maximal(const BivariatePolynomial& phi, const AmplitudeSpec& amp, int m, std::pair<double, double> s,
                      const std::vector<double>& lambdas, const QuadratureOptions& opts = {},
                      bool enforce_preconditions = true);

struct ScanOptions {
  double half_width = 0.25;   // s ranges over [-w, w]^2
  int points = 33;            // per axis at level 0
  double lambda_min = 2.0;
  double lambda_max = 8192.0; // at level 0; doubles with each level
  double lambda_ratio = 1.4142135623730951;
  int levels = 2;
};

struct RandolLevel {
  int points = 0;
  double spacing = 0.0;
  std::vector<double> s_axis;
  std::vector<double> lambdas;
  std::vector<double> M;      // row-major, M[a * points + b] at (s_axis[a], s_axis[b])
  double max_quadrature_error = 0.0;
};

struct RandolQ {
  double q = 0.0;
  std::vector<double> sums;   // per level, sum of spacing^2 M^q
  double ratio = 0.0;         // last level over the one before
};

struct RandolScan {
  int m = 0;
  std::vector<RandolLevel> levels;
  std::vector<RandolQ> q_report;
};

// I(lambda, s) on the tensor grid s_axis x s_axis at one lambda.
std::vector<std::complex<double>> eval_oscillatory_grid(const BivariatePolynomial& phi, const AmplitudeSpec& amp,
                                                        double lambda, const std::vector<double>& s_axis,
                                                        const QuadratureOptions& opts = {},
                                                        double* max_error = nullptr);

RandolScan randol_lq_scan(const BivariatePolynomial& phi, const AmplitudeSpec& amp, int m, const ScanOptions& grid,
                          const std::vector<double>& q_list, const QuadratureOptions& opts = {},
                          bool enforce_preconditions = true);

}  // namespace nphk
