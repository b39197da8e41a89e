#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "fdcran/geometry.hpp"
#include "fdcran/rng.hpp"

namespace fdcran {

struct FadingConfig {
  double alpha = 4.0;  // path loss exponent, > 2
};

// power path loss r^-alpha, r in km
double path_loss(double r, double alpha);

// i.i.d. CN(0,1) entries
Eigen::MatrixXcd sample_rayleigh_matrix(int rows, int cols, SplitRng& rng);

// geometry of one trial around the reference cluster
struct TrialGeometry {
  std::vector<Vec2> cluster_rus;    // serving RUs
  Vec2 ref_dl_user{};               // reference DL user position
  Vec2 ref_ul_user{};               // reference UL user position
  std::vector<Vec2> dl_users;       // co-scheduled DL users, reference first
  std::vector<Vec2> ul_users;       // co-scheduled UL users, reference first
  std::vector<Vec2> out_rus;        // RUs outside the cluster disk
  std::vector<Vec2> mi_ul_users;    // UL users outside the exclusion disk around ref_dl_user
  std::vector<Vec2> ici_ul_users;   // UL users outside the cluster disk
};

// every channel draw needed to evaluate both link directions of one trial;
// fading is i.i.d. CN(0,1) scaled by sqrt(path_loss)
struct ChannelSet {
  int n_d = 0, n_u = 0;
  Eigen::MatrixXcd dl_intended;                    // (Lc*Kd) x (Lc*Nd), user rows, reference row 0
  Eigen::MatrixXcd ul_intended;                    // (Lc*Nu) x (Lc*Ku), user cols, reference col 0
  std::vector<Eigen::RowVectorXcd> ici_dl;         // per out-of-cluster RU, 1 x Nd to the ref DL user
  std::vector<std::complex<double>> cmi_dl;        // per UL user outside the exclusion disk, to the ref DL user
  std::vector<Eigen::VectorXcd> ici_ul;            // per UL user outside the cluster, (Lc*Nu) x 1 to serving RUs
  std::vector<Eigen::MatrixXcd> cmi_ul;            // per out-of-cluster RU, (Lc*Nu) x Nd to serving RUs
};

ChannelSet assemble_channels(const TrialGeometry& geo, const FadingConfig& fading,
                             int n_d, int n_u, SplitRng& rng);

}  // namespace fdcran
