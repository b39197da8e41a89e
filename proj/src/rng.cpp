#include "fdcran/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace fdcran {

namespace {

inline uint64_t splitmix64(uint64_t& x) {
  x += 0x9E3779B97F4A7C15ULL;
  uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline uint64_t rotl(uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

}  // namespace

SplitRng::SplitRng(uint64_t seed, uint64_t stream, uint64_t substream) {
  // fold the ids through the permutation so nearby (seed, stream) pairs
  // land on unrelated states
  uint64_t x = seed;
  x = splitmix64(x) ^ (0x9E3779B97F4A7C15ULL * (stream + 1));
  x = splitmix64(x) ^ (0xD1B54A32D192ED03ULL * (substream + 1));
  for (auto& w : s_) w = splitmix64(x);
  if (!(s_[0] | s_[1] | s_[2] | s_[3])) s_[0] = 1;
}

uint64_t SplitRng::next_u64() {
  // xoshiro256++
  const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double SplitRng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SplitRng::next_gaussian() {
  if (have_gauss_) {
    have_gauss_ = false;
    return gauss_cache_;
  }
  double u, v, s;
  do {
    u = 2.0 * next_double() - 1.0;
    v = 2.0 * next_double() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  gauss_cache_ = v * f;
  have_gauss_ = true;
  return u * f;
}

std::complex<double> SplitRng::next_cscg() {
  constexpr double half = 0.70710678118654752440;
  const double re = next_gaussian();
  const double im = next_gaussian();
  return {re * half, im * half};
}

double SplitRng::next_gamma(double shape, double scale) {
  if (!(shape > 0.0) || !(scale > 0.0))
    throw std::invalid_argument("gamma: shape and scale must be positive");
  if (shape < 1.0) {
    // boost trick: draw at shape+1 and scale back by u^(1/shape)
    const double u = 1.0 - next_double();  // (0,1]
    return next_gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = next_gaussian();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = 1.0 - next_double();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v * scale;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v * scale;
  }
}

uint64_t SplitRng::poisson_small(double mean) {
  // exponential interarrivals in log space, exact for small means
  double t = 0.0;
  uint64_t k = 0;
  for (;;) {
    const double u = 1.0 - next_double();
    t -= std::log(u);
    if (t > mean) return k;
    ++k;
  }
}

uint64_t SplitRng::poisson_ptrd(double mean) {
  // Hormann's transformed rejection with decomposition (PTRD)
  const double smu = std::sqrt(mean);
  const double b = 0.931 + 2.53 * smu;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    double v = next_double();
    if (v <= 0.86 * vr) {
      const double u = v / vr - 0.43;
      return static_cast<uint64_t>(
          std::floor((2.0 * a / (0.5 - std::fabs(u)) + b) * u + mean + 0.445));
    }
    double u;
    if (v >= vr) {
      u = next_double() - 0.5;
    } else {
      u = v / vr - 0.93;
      u = (u < 0 ? -0.5 : 0.5) - u;
      v = next_double() * vr;
    }
    const double us = 0.5 - std::fabs(u);
    if (us < 0.013 && v > us) continue;
    const double kd = std::floor((2.0 * a / us + b) * u + mean + 0.445);
    if (kd < 0) continue;
    v = v * inv_alpha / (a / (us * us) + b);
    if (std::log(v) <= kd * std::log(mean) - mean - std::lgamma(kd + 1.0))
      return static_cast<uint64_t>(kd);
  }
}

uint64_t SplitRng::next_poisson(double mean) {
  if (!(mean >= 0.0)) throw std::invalid_argument("poisson: mean must be >= 0");
  if (mean == 0.0) return 0;
  if (mean < 30.0) return poisson_small(mean);
  return poisson_ptrd(mean);
}

}  // namespace fdcran
