#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "fdcran/geometry.hpp"

namespace fdcran {

enum class Duplex { fd, hd };

// How the mutual-interference exclusion radius around the reference DL user
// is specified: none (0), tied to the cluster radius, or a literal distance.
enum class ExclusionMode { zero, equal_cluster_radius, custom };

// Every knob consumed by the analytic and simulation paths. Defaults follow
// the baseline evaluation setup: lambda_d = 4/pi RUs/km^2, 8 antennas, one
// user per RU per block, 0.2 / 0.1 W transmit powers, -104 dBm noise,
// alpha = 4, unlimited fronthaul.
struct NetworkConfig {
  double lambda_d = 1.2732395447351628;  // 4/pi RUs per km^2
  double lambda_u = -1.0;                // UEs per km^2; negative = derive k_u * lambda_d
  int n_d = 8;
  int n_u = 8;
  int k_d = 1;
  int k_u = 1;
  double p_d = 0.2;                      // W
  double p_u = 0.1;                      // W
  double noise_d = 3.9810717055349694e-14;  // W (-104 dBm)
  double noise_u = 3.9810717055349694e-14;  // W
  double alpha = 4.0;
  double cluster_size = 3.0;             // L, mean RUs per cluster
  double explicit_radius = 0.0;          // km; > 0 overrides the L-derived radius
  ExclusionMode e_mode = ExclusionMode::equal_cluster_radius;
  double e_km = 0.0;                     // used when e_mode == custom
  double c_d = std::numeric_limits<double>::infinity();  // nat/s/Hz per fronthaul link
  double c_u = std::numeric_limits<double>::infinity();
  ClusterMode clustering = ClusterMode::user_centric;
  Duplex duplex = Duplex::fd;
  double fd_split = 0.5;                 // DL share of fronthaul capacity under FD; UL gets the rest
  double region_radius = 20.0;           // km, simulation disk
  int trials = 2000;
  std::uint64_t seed = 1;
  double rel_tol = 1e-6;
  double abs_tol = 1e-9;
  // residual RU self-interference, W, modeled as extra white noise on the
  // UL receive side while the RU also transmits; only active under FD
  double self_interference = 0.0;

  double ue_density() const { return lambda_u >= 0.0 ? lambda_u : k_u * lambda_d; }
  double dl_noise_effective() const { return noise_d; }
  double ul_noise_effective() const {
    return duplex == Duplex::fd ? noise_u + self_interference : noise_u;
  }
  double cluster_radius() const;
  double exclusion_radius() const;
  double mean_cluster_size() const;      // pi * lambda_d * R^2, = L unless R was overridden

  // throws std::invalid_argument naming the offending field
  void validate() const;
};

// Line-oriented "key = value" documents; '#' starts a comment, blank lines
// are skipped. Values accept unit suffixes dBm, W, km, nat where they make
// sense, plus the symbolic forms E in {zero, R}, C = infinite.
NetworkConfig parse_config(const std::string& text);
NetworkConfig load_config_file(const std::string& path);

// One "key = value" line per field, suitable for run manifests; parsing it
// back reproduces the config.
std::string render_config(const NetworkConfig& cfg);

}  // namespace fdcran
