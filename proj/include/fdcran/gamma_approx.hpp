#pragma once

#include <vector>

#include "fdcran/rng.hpp"

namespace fdcran {

// one beamformed-link power term, distributed as beta * Gamma(shape, scale)
struct GammaTerm {
  double beta = 0.0;
  double shape = 0.0;
  double scale = 1.0;
};

struct MomentMatch {
  double shape = 0.0;
  double scale = 1.0;
};

// single-gamma fit to a sum of N-antenna link gains with large-scale
// coefficients betas: shape = N (sum b)^2 / sum b^2, scale = sum b^2 / sum b
MomentMatch match_channel_strength(const std::vector<double>& betas, double antennas);

// per-RU second-order descriptions of the four interference classes and the
// two intended links; L is the average cluster size and may be fractional
std::vector<GammaTerm> intended_terms_dl(const std::vector<double>& betas, int n_d, int k_d,
                                         double L);
std::vector<GammaTerm> intended_terms_ul(const std::vector<double>& betas, int n_u, int k_u,
                                         double L);
std::vector<GammaTerm> ici_terms_dl(const std::vector<double>& betas, int k_d);
std::vector<GammaTerm> ici_terms_ul(const std::vector<double>& betas, double L);
GammaTerm cmi_term_dl(double beta);
std::vector<GammaTerm> cmi_terms_ul(const std::vector<double>& betas, int k_d, double L);

double sample_gamma_sum(const std::vector<GammaTerm>& terms, SplitRng& rng);

}  // namespace fdcran
