#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace fdcran {

// Tolerances and limits shared by every integral in the analytic path.
// s_truncation caps the semi-infinite CDF-inversion integral; 0 means the
// integrator picks the cutoff from its own tail bound.
struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_subdivisions = 400;
  double s_truncation = 0.0;
};

struct QuadResult {
  std::complex<double> value{0.0, 0.0};
  double error = 0.0;
  int evaluations = 0;
  bool converged = false;
};

struct RealQuadResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
  bool converged = false;
};

// Globally adaptive Gauss-Kronrod 15(7) on a finite interval. Bisects the
// segment with the largest error estimate until the tolerance or the
// subdivision cap is hit.
QuadResult integrate(const std::function<std::complex<double>(double)>& f, double a, double b,
                     const QuadratureSpec& spec = {});
RealQuadResult integrate_real(const std::function<double(double)>& f, double a, double b,
                              const QuadratureSpec& spec = {});

// Fixed-order Gauss-Legendre rule on [-1, 1]. Rules are generated on first
// use (Newton iteration on the Legendre recurrence) and cached.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussLegendreRule& gauss_legendre(int order);

std::complex<double> gl_integrate(const std::function<std::complex<double>(double)>& f, double a,
                                  double b, int order);
double gl_integrate_real(const std::function<double(double)>& f, double a, double b, int order);

}  // namespace fdcran
