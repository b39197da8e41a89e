#include "fdcran/gamma_approx.hpp"

#include <stdexcept>

namespace fdcran {

namespace {

void check_counts(int n, int k, double L) {
  if (k > n) throw std::invalid_argument("gamma terms: more users than antennas per RU");
  if (k < 1) throw std::invalid_argument("gamma terms: need at least one user per RU");
  if (!(L >= 1.0)) throw std::invalid_argument("gamma terms: average cluster size must be >= 1");
}

std::vector<GammaTerm> uniform_terms(const std::vector<double>& betas, double shape) {
  std::vector<GammaTerm> t;
  t.reserve(betas.size());
  for (double b : betas) {
    if (!(b > 0.0)) throw std::invalid_argument("gamma terms: betas must be positive");
    t.push_back({b, shape, 1.0});
  }
  return t;
}

}  // namespace

MomentMatch match_channel_strength(const std::vector<double>& betas, double antennas) {
  if (betas.empty()) throw std::invalid_argument("match_channel_strength: no betas");
  if (!(antennas > 0.0)) throw std::invalid_argument("match_channel_strength: antennas must be > 0");
  double s1 = 0.0, s2 = 0.0;
  for (double b : betas) {
    if (!(b > 0.0)) throw std::invalid_argument("match_channel_strength: betas must be positive");
    s1 += b;
    s2 += b * b;
  }
  return {antennas * s1 * s1 / s2, s2 / s1};
}

std::vector<GammaTerm> intended_terms_dl(const std::vector<double>& betas, int n_d, int k_d,
                                         double L) {
  check_counts(n_d, k_d, L);
  return uniform_terms(betas, static_cast<double>(n_d - k_d) + 1.0 / L);
}

std::vector<GammaTerm> intended_terms_ul(const std::vector<double>& betas, int n_u, int k_u,
                                         double L) {
  check_counts(n_u, k_u, L);
  return uniform_terms(betas, static_cast<double>(n_u - k_u) + 1.0 / L);
}

std::vector<GammaTerm> ici_terms_dl(const std::vector<double>& betas, int k_d) {
  if (k_d < 1) throw std::invalid_argument("ici_terms_dl: need at least one user per RU");
  return uniform_terms(betas, static_cast<double>(k_d));
}

std::vector<GammaTerm> ici_terms_ul(const std::vector<double>& betas, double L) {
  if (!(L >= 1.0)) throw std::invalid_argument("ici_terms_ul: average cluster size must be >= 1");
  return uniform_terms(betas, 1.0 / L);
}

GammaTerm cmi_term_dl(double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("cmi_term_dl: beta must be positive");
  return {beta, 1.0, 1.0};  // exact exponential, not an approximation
}

std::vector<GammaTerm> cmi_terms_ul(const std::vector<double>& betas, int k_d, double L) {
  if (k_d < 1) throw std::invalid_argument("cmi_terms_ul: need at least one user per RU");
  if (!(L >= 1.0)) throw std::invalid_argument("cmi_terms_ul: average cluster size must be >= 1");
  return uniform_terms(betas, static_cast<double>(k_d) / L);
}

double sample_gamma_sum(const std::vector<GammaTerm>& terms, SplitRng& rng) {
  double acc = 0.0;
  for (const auto& t : terms) acc += t.beta * rng.next_gamma(t.shape, t.scale);
  return acc;
}

}  // namespace fdcran
