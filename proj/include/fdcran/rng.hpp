#pragma once

#include <complex>
#include <cstdint>

namespace fdcran {

// Splittable random stream: xoshiro256++ state derived from
// (seed, stream, substream) through the splitmix64 permutation.
// Monte Carlo trials get one stream per trial index so results are
// reproducible bit for bit regardless of how trials are scheduled.
class SplitRng {
 public:
  explicit SplitRng(uint64_t seed) : SplitRng(seed, 0, 0) {}
  SplitRng(uint64_t seed, uint64_t stream) : SplitRng(seed, stream, 0) {}
  SplitRng(uint64_t seed, uint64_t stream, uint64_t substream);

  uint64_t next_u64();

  // uniform on [0,1), 53-bit resolution
  double next_double();

  // standard normal, polar method with one cached deviate
  double next_gaussian();

  // circularly symmetric complex gaussian, unit total variance
  std::complex<double> next_cscg();

  // gamma variate, any shape > 0 (Marsaglia-Tsang, with the shape<1 boost)
  double next_gamma(double shape, double scale);

  // exact Poisson sampling for any mean >= 0
  uint64_t next_poisson(double mean);

 private:
  uint64_t s_[4];
  double gauss_cache_ = 0.0;
  bool have_gauss_ = false;

  uint64_t poisson_small(double mean);
  uint64_t poisson_ptrd(double mean);
};

}  // namespace fdcran
