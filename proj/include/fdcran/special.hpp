#pragma once

#include <complex>
#include <cstdint>

namespace fdcran {

// Gauss hypergeometric function with real parameters and complex argument,
// principal branch. Dispatches between the defining series, the z/(z-1)
// transformation, and the 1/z and 1-z connection formulas; arguments that
// none of those reach fall back to adaptive quadrature of the Euler integral
// (counted, see below).
std::complex<double> hyp2f1(double a, double b, double c, std::complex<double> z);

// Number of hyp2f1 evaluations that had to take the quadrature fallback
// since process start. Production call sites are expected to keep this at 0.
std::uint64_t hyp2f1_fallback_count();

// Exponential integral E1(x) for x > 0: series below 1, continued fraction
// above.
double expint_e1(double x);

}  // namespace fdcran
