#pragma once

// Quadrature for weakly singular kernels, one-sided numerical
// differentiation, extrapolated limits and the small set of special
// functions the transform kernels need.

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace georadon::numerics {

using Fn1D = std::function<double(double)>;

// ---------------------------------------------------------------------------
// Specs

struct QuadratureSpec {
  enum class Rule { smooth_adaptive, endpoint_singular_power };
  enum class SingularEnd { lower, upper };

  Rule rule = Rule::smooth_adaptive;
  // Exponent beta of the endpoint factor (s-a)^beta or (b-s)^beta.
  // Must satisfy beta > -1 (integrability); beta <= 0 is the singular case.
  double singular_exponent = 0.0;
  SingularEnd singular_end = SingularEnd::lower;
  int node_count = 24;     // nodes per panel
  double rel_tol = 1e-8;

  void validate() const;

  static QuadratureSpec smooth(double rel_tol = 1e-8, int nodes = 24);
  static QuadratureSpec singular_lower(double beta, double rel_tol = 1e-8, int nodes = 24);
  static QuadratureSpec singular_upper(double beta, double rel_tol = 1e-8, int nodes = 24);
};

struct TailSpec {
  enum class Decay { power, gaussian, compact };

  Decay kind = Decay::gaussian;
  double mu = 0.0;            // power decay order: |f(s)| ~ s^{-mu}
  double log_exponent = 0.0;  // optional log refinement: f ~ s^{-mu} (log s)^L
  double scale = 1.0;         // gaussian: |f(s)| <~ scale * exp(-((s-center)/width)^2)
  double width = 1.0;
  double center = 0.0;
  double support_radius = 0.0;     // compact support: f == 0 for s > radius
  double truncation_radius = 10.0;
  double tail_bound = 0.0;

  static TailSpec power(double mu, double log_exponent = 0.0);
  static TailSpec gaussian(double scale = 1.0, double width = 1.0, double center = 0.0);
  static TailSpec compact(double radius);

  // Upper bound for |integral of f over (T, infinity)| under this decay.
  double remainder_bound(double T) const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
  long evaluations = 0;
};

struct LimitEstimate {
  double value = 0.0;
  double error_estimate = 0.0;
  int levels_used = 0;
  bool converged = true;
};

// ---------------------------------------------------------------------------
// Gaussian rules (nodes on [-1,1])

struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre, weight 1.
const Rule1D& gauss_legendre(int n);

// Gauss-Jacobi, weight (1-x)^a (1+x)^b, a,b > -1.
Rule1D gauss_jacobi(int n, double a, double b);

// ---------------------------------------------------------------------------
// Integration

// Integral over (a,b) of f, where f may carry one endpoint power factor
// declared in `spec`. The declared factor is removed analytically
// (Gauss-Jacobi panel at the singular end), so polynomials times the
// weight are integrated to rel_tol.
QuadratureResult integrate_singular(const Fn1D& f, double a, double b,
                                    const QuadratureSpec& spec);

// Integral over (a, infinity). The truncation point is chosen from the
// decay metadata so that the certified remainder bound stays below
// rel_tol times the running value; power tails are mapped by w = 1/s and
// finished with a Jacobi rule.
QuadratureResult integrate_tail(const Fn1D& f, double a, const TailSpec& tail,
                                const QuadratureSpec& spec);

// Plain adaptive Gauss-Legendre on a finite interval.
QuadratureResult integrate_adaptive(const Fn1D& f, double a, double b,
                                    double rel_tol, int nodes = 24);

// ---------------------------------------------------------------------------
// Differentiation and limits

enum class StencilSide { right, left, central };

struct DerivativeConfig {
  int accuracy = 4;   // order of the base finite-difference stencil
  int levels = 4;     // Richardson levels (step halving)
  double shrink = 0.5;
};

// k-th derivative of f at t0 by finite differences (Fornberg weights)
// with Richardson extrapolation over steps step0 * shrink^j. The error
// estimate comes from agreement between successive extrapolation levels;
// a non-contracting table flags failure and returns the best row.
LimitEstimate derivative_at(const Fn1D& f, double t0, int order,
                            StencilSide side, double step0,
                            const DerivativeConfig& cfg = {});

struct GeometricSequence {
  double r0 = 0.4;
  double ratio = 0.5;
  int levels = 6;
  // Extrapolation variable: f is treated as a series in r^power
  // (power = 2 for even profiles, 1 for generic ones).
  int power = 1;
};

// Extrapolated limit of f(r) as r -> 0+ along r_j = r0 * ratio^j.
LimitEstimate limit_at_zero(const Fn1D& f, const GeometricSequence& seq = {});

// Finite-difference weights for the m-th derivative at z on arbitrary
// nodes x (Fornberg's recurrence).
std::vector<double> fornberg_weights(double z, std::span<const double> x, int m);

// ---------------------------------------------------------------------------
// Special functions

double gamma_fn(double x);      // x > 0
double log_gamma(double x);     // x > 0
double surface_area(int d);     // sigma_{d-1} = 2 pi^{d/2} / Gamma(d/2), d >= 1

// ---------------------------------------------------------------------------
// Small utilities

inline constexpr double kRelFloor = 1e-30;  // additive floor for relative errors

inline double rel_err(double got, double want) {
  return std::abs(got - want) / (std::abs(want) + kRelFloor);
}

// Index-parallel loop used by sinogram builds and experiment grids.
// Results must be written to disjoint slots; scheduling is not observable.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace georadon::numerics
