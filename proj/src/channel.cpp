#include "fdcran/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace fdcran {

double path_loss(double r, double alpha) {
  if (!(r > 0.0))
    throw std::domain_error("path_loss: r must be > 0 (geometry is rejected upstream)");
  if (!(alpha > 2.0)) throw std::invalid_argument("path_loss: alpha must be > 2");
  return std::pow(r, -alpha);
}

Eigen::MatrixXcd sample_rayleigh_matrix(int rows, int cols, SplitRng& rng) {
  if (rows <= 0 || cols <= 0)
    throw std::invalid_argument("sample_rayleigh_matrix: dimensions must be positive");
  Eigen::MatrixXcd m(rows, cols);
  // row-major fill so the draw order is part of the contract
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.next_cscg();
  return m;
}

namespace {

// 1 x n fading row to a single-antenna receiver, scaled by sqrt(beta)
Eigen::RowVectorXcd faded_row(double beta, int n, SplitRng& rng) {
  Eigen::RowVectorXcd v(n);
  const double s = std::sqrt(beta);
  for (int j = 0; j < n; ++j) v(j) = s * rng.next_cscg();
  return v;
}

}  // namespace

ChannelSet assemble_channels(const TrialGeometry& geo, const FadingConfig& fading,
                             int n_d, int n_u, SplitRng& rng) {
  const int lc = static_cast<int>(geo.cluster_rus.size());
  if (lc == 0) throw std::invalid_argument("assemble_channels: empty cluster");
  const int kd = static_cast<int>(geo.dl_users.size()) / lc;
  const int ku = static_cast<int>(geo.ul_users.size()) / lc;
  if (kd * lc != static_cast<int>(geo.dl_users.size()) ||
      ku * lc != static_cast<int>(geo.ul_users.size()))
    throw std::invalid_argument("assemble_channels: user counts must be multiples of the cluster size");

  ChannelSet cs;
  cs.n_d = n_d;
  cs.n_u = n_u;

  // combined DL matrix: row per user, Nd-wide block per serving RU
  cs.dl_intended.resize(lc * kd, lc * n_d);
  for (int u = 0; u < lc * kd; ++u) {
    for (int l = 0; l < lc; ++l) {
      const double beta = path_loss(dist(geo.dl_users[u], geo.cluster_rus[l]), fading.alpha);
      cs.dl_intended.block(u, l * n_d, 1, n_d) = faded_row(beta, n_d, rng);
    }
  }

  // combined UL matrix: Nu-wide block per serving RU, column per user
  cs.ul_intended.resize(lc * n_u, lc * ku);
  for (int u = 0; u < lc * ku; ++u) {
    for (int l = 0; l < lc; ++l) {
      const double beta = path_loss(dist(geo.ul_users[u], geo.cluster_rus[l]), fading.alpha);
      cs.ul_intended.block(l * n_u, u, n_u, 1) = faded_row(beta, n_u, rng).transpose();
    }
  }

  cs.ici_dl.reserve(geo.out_rus.size());
  for (const auto& ru : geo.out_rus) {
    const double beta = path_loss(dist(geo.ref_dl_user, ru), fading.alpha);
    cs.ici_dl.push_back(faded_row(beta, n_d, rng));
  }

  cs.cmi_dl.reserve(geo.mi_ul_users.size());
  for (const auto& ue : geo.mi_ul_users) {
    const double beta = path_loss(dist(geo.ref_dl_user, ue), fading.alpha);
    cs.cmi_dl.push_back(std::sqrt(beta) * rng.next_cscg());
  }

  cs.ici_ul.reserve(geo.ici_ul_users.size());
  for (const auto& ue : geo.ici_ul_users) {
    Eigen::VectorXcd h(lc * n_u);
    for (int l = 0; l < lc; ++l) {
      const double beta = path_loss(dist(ue, geo.cluster_rus[l]), fading.alpha);
      h.segment(l * n_u, n_u) = faded_row(beta, n_u, rng).transpose();
    }
    cs.ici_ul.push_back(std::move(h));
  }

  cs.cmi_ul.reserve(geo.out_rus.size());
  for (const auto& ru : geo.out_rus) {
    Eigen::MatrixXcd g(lc * n_u, n_d);
    for (int l = 0; l < lc; ++l) {
      const double beta = path_loss(dist(ru, geo.cluster_rus[l]), fading.alpha);
      const double s = std::sqrt(beta);
      for (int i = 0; i < n_u; ++i)
        for (int j = 0; j < n_d; ++j) g(l * n_u + i, j) = s * rng.next_cscg();
    }
    cs.cmi_ul.push_back(std::move(g));
  }

  return cs;
}

}  // namespace fdcran
