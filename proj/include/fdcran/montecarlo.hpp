#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "fdcran/channel.hpp"
#include "fdcran/config.hpp"
#include "fdcran/geometry.hpp"
#include "fdcran/se_result.hpp"

namespace fdcran {

// duplexing arrangement applied when a trial is scored. Under FD each
// fronthaul link is shared: the DL gets fd_fronthaul_split of the capacity
// and the UL the remainder. Under HD the active direction gets the full
// link but only every other resource block.
struct DuplexSpec {
  Duplex mode = Duplex::fd;
  double fd_fronthaul_split = 0.5;
};

// power budget of one link direction, all in W
struct SinrComponents {
  double x = 0.0;      // intended signal after beamforming
  double ici = 0.0;    // inter-cluster interference
  double cmi = 0.0;    // cross-direction interference (zero under HD)
  double noise = 0.0;
  double sinr() const { return x / (ici + cmi + noise); }
};

struct TrialOutcome {
  SinrComponents dl;
  SinrComponents ul;
  double dl_sinr = 0.0;
  double ul_sinr = 0.0;
  bool resampled = false;  // first draw was degenerate (usually an empty cluster)
};

// everything that went into one trial, for white-box checks
struct TrialDetail {
  TrialGeometry geometry;
  ChannelSet channels;
  Eigen::MatrixXcd precoder;                   // serving-cluster ZF precoder
  Eigen::MatrixXcd decoder;                    // serving-cluster ZF decoder
  std::vector<Eigen::MatrixXcd> out_precoders; // random unit-norm, one per out-of-cluster RU
};

// one full drop: PPP geometry, channels, ZF beamforming, SINR assembly.
// Channel and geometry draws are identical for FD and HD given the same
// seed; the duplex mode only decides which terms enter the SINR.
TrialOutcome run_trial(const NetworkConfig& cfg, ClusterMode mode,
                       const DuplexSpec& duplex, std::uint64_t trial_seed,
                       TrialDetail* detail = nullptr);

// cut-set scoring of a batch of trials: per-direction mean of
// min(ln(1+sinr), effective fronthaul capacity), with the HD half-rate
// prefactor. Throws on an empty batch.
SeResult estimate_se(const std::vector<TrialOutcome>& trials, double c_d, double c_u,
                     const DuplexSpec& duplex);

struct SimulationSummary {
  SeResult se;
  double resample_rate = 0.0;    // fraction of trials whose first draw was degenerate
  double truncated_dl_w = 0.0;   // mean interference power beyond the region edge
  double truncated_ul_w = 0.0;
  int trials = 0;
  int workers = 1;
};

// full experiment at one parameter point: cfg.trials trials, per-trial RNG
// streams SplitRng(cfg.seed, trial_index), chunked across worker threads.
// Results are bit-identical for any worker count.
SimulationSummary simulate(const NetworkConfig& cfg, ClusterMode mode,
                           const DuplexSpec& duplex);

// both duplex modes scored from one set of draws (common random numbers,
// which also makes the FD/HD gain estimate tighter)
std::pair<SimulationSummary, SimulationSummary> simulate_fd_hd(const NetworkConfig& cfg,
                                                               ClusterMode mode,
                                                               double fd_split);

// one set of draws scored at several fronthaul capacities (c_d = c_u = cap
// per entry; inf allowed), FD and HD per entry. The channel draws do not
// depend on the cap, so a capacity sweep needs only one simulation.
std::vector<std::pair<SimulationSummary, SimulationSummary>> simulate_capacity_sweep(
    const NetworkConfig& cfg, ClusterMode mode, const std::vector<double>& caps,
    double fd_split);

// worker thread count: FDCRAN_THREADS if set, else the hardware count
int worker_count();

// analytic bound on the mean interference power sourced outside the finite
// simulation region (reported alongside results; see SimulationSummary)
double truncated_interference_w(const NetworkConfig& cfg, bool downlink, Duplex duplex);

}  // namespace fdcran
