#include "fdcran/special.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

#include "fdcran/quadrature.hpp"

namespace fdcran {

namespace {

using cd = std::complex<double>;

std::atomic<std::uint64_t> g_fallback_count{0};

bool near_integer(double x, double tol = 1e-9) {
  return std::abs(x - std::round(x)) < tol;
}

bool nonpositive_integer(double x) { return x <= 0.5 && near_integer(x); }

// Plain Gauss series. Valid for |z| < 1; practical up to |z| ~ 0.98.
cd gauss_series(double a, double b, double c, cd z) {
  if (nonpositive_integer(c)) throw std::domain_error("hyp2f1: c is a nonpositive integer");
  cd term{1.0, 0.0};
  cd sum{1.0, 0.0};
  int small_streak = 0;
  for (int n = 0; n < 8000; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
    sum += term;
    if (std::abs(term) <= 1e-17 * (std::abs(sum) + 1e-300)) {
      if (++small_streak >= 2) return sum;
    } else {
      small_streak = 0;
    }
  }
  throw std::runtime_error("hyp2f1: series did not converge");
}

// sign of Gamma(x) for non-pole real x
double gamma_sign(double x) {
  if (x > 0.0) return 1.0;
  return (static_cast<long long>(std::floor(-x)) % 2 == 0) ? -1.0 : 1.0;
}

// Gamma(n1)Gamma(n2) / (Gamma(d1)Gamma(d2)) with pole handling: a pole in
// the denominator sends the ratio to 0, a pole in the numerator is an error.
double gamma_ratio(double n1, double n2, double d1, double d2) {
  if (nonpositive_integer(n1) || nonpositive_integer(n2))
    throw std::domain_error("hyp2f1: connection formula hit a Gamma pole");
  if (nonpositive_integer(d1) || nonpositive_integer(d2)) return 0.0;
  double lg = std::lgamma(n1) + std::lgamma(n2) - std::lgamma(d1) - std::lgamma(d2);
  double sg = gamma_sign(n1) * gamma_sign(n2) * gamma_sign(d1) * gamma_sign(d2);
  return sg * std::exp(lg);
}

cd pow_principal(cd base, double expo) {
  if (base == cd{0.0, 0.0}) return (expo > 0.0) ? cd{0.0, 0.0} : cd{INFINITY, 0.0};
  return std::exp(expo * std::log(base));
}

// DLMF 15.8.2; needs a - b away from integers.
cd large_z_connection(double a, double b, double c, cd z) {
  cd inv = 1.0 / z;
  cd w1 = gamma_ratio(c, b - a, b, c - a) * pow_principal(-z, -a) *
          gauss_series(a, a - c + 1.0, a - b + 1.0, inv);
  cd w2 = gamma_ratio(c, a - b, a, c - b) * pow_principal(-z, -b) *
          gauss_series(b, b - c + 1.0, b - a + 1.0, inv);
  return w1 + w2;
}

// DLMF 15.8.4; needs c - a - b away from integers.
cd near_one_connection(double a, double b, double c, cd z) {
  cd u = 1.0 - z;
  cd w1 = gamma_ratio(c, c - a - b, c - a, c - b) * gauss_series(a, b, a + b - c + 1.0, u);
  cd w2 = gamma_ratio(c, a + b - c, a, b) * pow_principal(u, c - a - b) *
          gauss_series(c - a, c - b, c - a - b + 1.0, u);
  return w1 + w2;
}

// Euler integral, used only when every series route is out of reach. The
// substitutions t = (u^m)/2 and 1-t = (v^m)/2 tame the endpoint
// singularities for small b and c-b.
cd euler_integral(double a, double b, double c, cd z) {
  g_fallback_count.fetch_add(1, std::memory_order_relaxed);
  if (!(c > b && b > 0.0)) {
    if (c > a && a > 0.0) return euler_integral(b, a, c, z);
    throw std::domain_error("hyp2f1: quadrature fallback needs c > b > 0 for a parameter order");
  }
  QuadratureSpec spec;
  spec.rel_tol = 1e-12;
  spec.abs_tol = 1e-300;
  spec.max_subdivisions = 2000;

  const double mb = std::max(1.0, std::ceil(1.0 / b));
  const double mc = std::max(1.0, std::ceil(1.0 / (c - b)));
  auto left = integrate(
      [&](double u) -> cd {
        double t = 0.5 * std::pow(u, mb);
        return std::pow(t, b - 1.0) * std::pow(1.0 - t, c - b - 1.0) *
               pow_principal(1.0 - z * t, -a) * 0.5 * mb * std::pow(u, mb - 1.0);
      },
      0.0, 1.0, spec);
  auto right = integrate(
      [&](double v) -> cd {
        double omt = 0.5 * std::pow(v, mc);
        double t = 1.0 - omt;
        return std::pow(t, b - 1.0) * std::pow(omt, c - b - 1.0) *
               pow_principal(1.0 - z * t, -a) * 0.5 * mc * std::pow(v, mc - 1.0);
      },
      0.0, 1.0, spec);
  double norm = gamma_ratio(c, 1.0, b, c - b);
  return norm * (left.value + right.value);
}

}  // namespace

std::complex<double> hyp2f1(double a, double b, double c, std::complex<double> z) {
  if (nonpositive_integer(c)) throw std::domain_error("hyp2f1: c is a nonpositive integer");
  if (std::abs(z) < 1e-300) return {1.0, 0.0};
  if (a == 0.0 || b == 0.0) return {1.0, 0.0};
  if (z == cd{1.0, 0.0}) {
    if (c - a - b <= 0.0) throw std::domain_error("hyp2f1: divergent at z = 1");
    return {gamma_ratio(c, c - a - b, c - a, c - b), 0.0};
  }

  // negative-integer a or b: the series terminates, any |z| works
  if ((nonpositive_integer(a) && near_integer(a)) || (nonpositive_integer(b) && near_integer(b)))
    return gauss_series(a, b, c, z);

  const double za = std::abs(z);
  const cd zp = z / (z - 1.0);
  const double zpa = std::abs(zp);

  auto pfaff = [&]() { return pow_principal(1.0 - z, -a) * gauss_series(a, c - b, c, zp); };

  if (za <= 0.80 || zpa <= 0.80) {
    return (za <= zpa) ? gauss_series(a, b, c, z) : pfaff();
  }
  if (za > 1.25 && !near_integer(a - b, 1e-6)) return large_z_connection(a, b, c, z);
  if (std::abs(1.0 - z) <= 0.75 && !near_integer(c - a - b, 1e-6))
    return near_one_connection(a, b, c, z);
  if (za <= 0.98 || zpa <= 0.98) {
    return (za <= zpa) ? gauss_series(a, b, c, z) : pfaff();
  }
  return euler_integral(a, b, c, z);
}

std::uint64_t hyp2f1_fallback_count() {
  return g_fallback_count.load(std::memory_order_relaxed);
}

double expint_e1(double x) {
  if (!(x > 0.0)) throw std::domain_error("expint_e1: requires x > 0");
  if (x <= 1.0) {
    // E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)
    constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
    double sum = 0.0;
    double term = 1.0;
    for (int k = 1; k <= 60; ++k) {
      term *= x / k;
      double add = term / k;
      sum += (k % 2 == 1) ? add : -add;
      if (add < 1e-18 * (std::abs(sum) + 1e-300)) break;
    }
    return -kEulerGamma - std::log(x) + sum;
  }
  // modified Lentz continued fraction, e^{-x} (1/(x+1- 1/(x+3- 4/(x+5- ...))))
  double b = x + 1.0;
  double c = 1e308;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 200; ++i) {
    double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x);
}

}  // namespace fdcran
