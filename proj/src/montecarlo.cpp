#include "fdcran/montecarlo.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "fdcran/beamforming.hpp"

namespace fdcran {

namespace {

// transmitter-receiver pairs closer than this (km) get the trial redrawn;
// the event probability is ~1e-12 per trial, so no measurable bias, but it
// keeps r^-alpha out of the non-finite range
constexpr double kMinPairDistance = 1e-6;

constexpr int kMaxRedraws = 1000;

// duplex-independent power terms of one drop
struct TrialPowers {
  double dl_x = 0.0, dl_ici = 0.0, dl_cmi = 0.0;
  double ul_x = 0.0, ul_ici = 0.0, ul_cmi = 0.0;
  bool resampled = false;
};

bool far_from(const std::vector<Vec2>& pts, const Vec2& q) {
  for (const auto& p : pts)
    if (dist(p, q) < kMinPairDistance) return false;
  return true;
}

bool far_from_all(const std::vector<Vec2>& pts, const std::vector<Vec2>& qs) {
  for (const auto& q : qs)
    if (!far_from(pts, q)) return false;
  return true;
}

Vec2 uniform_in_disk(const Vec2& center, double radius, SplitRng& rng) {
  const double r = radius * std::sqrt(rng.next_double());
  const double phi = 2.0 * M_PI * rng.next_double();
  return {center.x + r * std::cos(phi), center.y + r * std::sin(phi)};
}

// one geometry draw; false means the caller should redraw (empty cluster or
// a coincident transmitter-receiver pair)
bool try_sample_geometry(const NetworkConfig& cfg, ClusterMode mode, SplitRng& rng,
                         TrialGeometry* geo) {
  const double R = cfg.cluster_radius();
  const double E = cfg.exclusion_radius();
  const Region region{{0.0, 0.0}, cfg.region_radius};
  const Vec2 center{0.0, 0.0};

  const PointPattern rus = sample_ppp(cfg.lambda_d, region, rng);
  const PointPattern ues = sample_ppp(cfg.ue_density(), region, rng);

  const ClusterSelection sel = build_cluster(rus, center, R);
  if (sel.empty) return false;

  geo->cluster_rus = sel.ru_positions;
  if (mode == ClusterMode::user_centric) {
    // reference users sit at the cluster center by construction
    geo->ref_dl_user = center;
    geo->ref_ul_user = center;
  } else {
    const double d_dl = sample_disjoint_user_distance(R, rng);
    const double a_dl = 2.0 * M_PI * rng.next_double();
    geo->ref_dl_user = {d_dl * std::cos(a_dl), d_dl * std::sin(a_dl)};
    const double d_ul = sample_disjoint_user_distance(R, rng);
    const double a_ul = 2.0 * M_PI * rng.next_double();
    geo->ref_ul_user = {d_ul * std::cos(a_ul), d_ul * std::sin(a_ul)};
  }

  // co-scheduled users fill the joint ZF dimensions of the cluster
  const int lc = static_cast<int>(geo->cluster_rus.size());
  geo->dl_users.assign(1, geo->ref_dl_user);
  for (int i = 1; i < lc * cfg.k_d; ++i)
    geo->dl_users.push_back(uniform_in_disk(center, R, rng));
  geo->ul_users.assign(1, geo->ref_ul_user);
  for (int i = 1; i < lc * cfg.k_u; ++i)
    geo->ul_users.push_back(uniform_in_disk(center, R, rng));

  geo->out_rus = points_outside_disk(rus, center, R);
  // the whole UL-UE field interferes with the reference DL user except
  // inside the cancellation disk; only out-of-cluster UEs hit the UL
  geo->mi_ul_users = points_outside_disk(ues, geo->ref_dl_user, E);
  geo->ici_ul_users = points_outside_disk(ues, center, R);

  if (!far_from_all(geo->cluster_rus, geo->dl_users)) return false;
  if (!far_from_all(geo->cluster_rus, geo->ul_users)) return false;
  if (!far_from(geo->out_rus, geo->ref_dl_user)) return false;
  if (!far_from(geo->mi_ul_users, geo->ref_dl_user)) return false;
  if (!far_from_all(geo->ici_ul_users, geo->cluster_rus)) return false;
  if (!far_from_all(geo->out_rus, geo->cluster_rus)) return false;
  return true;
}

// independent unit-norm columns, the stand-in for precoders of clusters
// whose channels are never observed
Eigen::MatrixXcd random_unit_columns(int rows, int cols, SplitRng& rng) {
  Eigen::MatrixXcd m = sample_rayleigh_matrix(rows, cols, rng);
  for (int j = 0; j < cols; ++j) {
    const double n = m.col(j).norm();
    if (n <= 0.0) throw std::runtime_error("random_unit_columns: zero draw");
    m.col(j) /= n;
  }
  return m;
}

TrialPowers compute_trial(const NetworkConfig& cfg, ClusterMode mode, SplitRng& rng,
                          TrialDetail* detail) {
  TrialPowers out;
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    TrialGeometry geo;
    if (!try_sample_geometry(cfg, mode, rng, &geo)) {
      out.resampled = true;
      continue;
    }

    ChannelSet ch = assemble_channels(geo, FadingConfig{cfg.alpha}, cfg.n_d, cfg.n_u, rng);

    Eigen::MatrixXcd precoder, decoder;
    std::vector<Eigen::MatrixXcd> out_precoders;
    try {
      precoder = zf_precoder(ch.dl_intended);
      decoder = zf_decoder(ch.ul_intended);
      out_precoders.reserve(geo.out_rus.size());
      for (size_t m = 0; m < geo.out_rus.size(); ++m)
        out_precoders.push_back(random_unit_columns(cfg.n_d, cfg.k_d, rng));
    } catch (const std::runtime_error&) {
      // rank-deficient draw; probability zero but cheap to guard
      out.resampled = true;
      continue;
    }

    const Eigen::RowVectorXcd g = ch.dl_intended.row(0);
    const Eigen::VectorXcd v = precoder.col(0);
    const Eigen::RowVectorXcd w = decoder.row(0);
    const Eigen::VectorXcd h = ch.ul_intended.col(0);

    out.dl_x = cfg.p_d * effective_gain(g, v);
    out.ul_x = cfg.p_u * effective_gain(w, h);

    double ici_dl = 0.0, cmi_ul = 0.0;
    for (size_t m = 0; m < geo.out_rus.size(); ++m) {
      ici_dl += (ch.ici_dl[m] * out_precoders[m]).squaredNorm();
      cmi_ul += (w * ch.cmi_ul[m] * out_precoders[m]).squaredNorm();
    }
    out.dl_ici = cfg.p_d * ici_dl;
    out.ul_cmi = cfg.p_d * cmi_ul;

    double cmi_dl = 0.0;
    for (const auto& c : ch.cmi_dl) cmi_dl += std::norm(c);
    out.dl_cmi = cfg.p_u * cmi_dl;

    double ici_ul = 0.0;
    for (const auto& hu : ch.ici_ul) ici_ul += std::norm((w * hu).value());
    out.ul_ici = cfg.p_u * ici_ul;

    if (detail) {
      detail->geometry = std::move(geo);
      detail->channels = std::move(ch);
      detail->precoder = std::move(precoder);
      detail->decoder = std::move(decoder);
      detail->out_precoders = std::move(out_precoders);
    }
    return out;
  }
  throw std::runtime_error("compute_trial: geometry kept degenerating; check the config");
}

TrialOutcome score_trial(const TrialPowers& p, const NetworkConfig& cfg,
                         const DuplexSpec& duplex) {
  TrialOutcome t;
  t.dl.x = p.dl_x;
  t.dl.ici = p.dl_ici;
  t.dl.noise = cfg.noise_d;
  t.ul.x = p.ul_x;
  t.ul.ici = p.ul_ici;
  if (duplex.mode == Duplex::fd) {
    t.dl.cmi = p.dl_cmi;
    t.ul.cmi = p.ul_cmi;
    t.ul.noise = cfg.noise_u + cfg.self_interference;
  } else {
    t.ul.noise = cfg.noise_u;
  }
  t.dl_sinr = t.dl.sinr();
  t.ul_sinr = t.ul.sinr();
  t.resampled = p.resampled;
  return t;
}

std::vector<TrialPowers> simulate_raw(const NetworkConfig& cfg, ClusterMode mode,
                                      int* workers_used) {
  cfg.validate();
  const int n = cfg.trials;
  std::vector<TrialPowers> raw(static_cast<size_t>(n));
  int workers = std::min(worker_count(), n);
  if (workers_used) *workers_used = workers;

  auto chunk = [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
      SplitRng rng(cfg.seed, static_cast<std::uint64_t>(i));
      raw[static_cast<size_t>(i)] = compute_trial(cfg, mode, rng, nullptr);
    }
  };

  if (workers <= 1) {
    chunk(0, n);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    const int step = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const int lo = w * step;
      const int hi = std::min(n, lo + step);
      if (lo < hi) pool.emplace_back(chunk, lo, hi);
    }
    for (auto& t : pool) t.join();
  }
  return raw;
}

SimulationSummary summarize(const std::vector<TrialPowers>& raw, const NetworkConfig& cfg,
                            ClusterMode mode, const DuplexSpec& duplex, int workers) {
  (void)mode;
  std::vector<TrialOutcome> outcomes;
  outcomes.reserve(raw.size());
  for (const auto& p : raw) outcomes.push_back(score_trial(p, cfg, duplex));

  SimulationSummary s;
  s.se = estimate_se(outcomes, cfg.c_d, cfg.c_u, duplex);
  long double redrawn = 0.0;
  for (const auto& t : outcomes) redrawn += t.resampled ? 1.0 : 0.0;
  s.resample_rate = static_cast<double>(redrawn / outcomes.size());
  s.se.empty_cluster_prob = s.resample_rate;
  s.truncated_dl_w = truncated_interference_w(cfg, true, duplex.mode);
  s.truncated_ul_w = truncated_interference_w(cfg, false, duplex.mode);
  s.trials = static_cast<int>(raw.size());
  s.workers = workers;
  return s;
}

}  // namespace

int worker_count() {
  if (const char* env = std::getenv("FDCRAN_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1 && v <= 256) return static_cast<int>(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

double truncated_interference_w(const NetworkConfig& cfg, bool downlink, Duplex duplex) {
  // a transmitter at distance r contributes mean power p r^-alpha after
  // unit-norm beamforming (per stream for the RU case), so the field beyond
  // the region edge carries 2 pi lambda p R^(2-alpha)/(alpha-2) per class
  const double tail = 2.0 * M_PI * std::pow(cfg.region_radius, 2.0 - cfg.alpha) /
                      (cfg.alpha - 2.0);
  const double ru_field = cfg.lambda_d * cfg.p_d * cfg.k_d;
  const double ue_field = cfg.ue_density() * cfg.p_u;
  const bool fd = duplex == Duplex::fd;
  if (downlink) return tail * (ru_field + (fd ? ue_field : 0.0));
  return tail * (ue_field + (fd ? ru_field : 0.0));
}

TrialOutcome run_trial(const NetworkConfig& cfg, ClusterMode mode, const DuplexSpec& duplex,
                       std::uint64_t trial_seed, TrialDetail* detail) {
  cfg.validate();
  if (!(duplex.fd_fronthaul_split > 0.0 && duplex.fd_fronthaul_split < 1.0))
    throw std::invalid_argument("run_trial: fd_fronthaul_split must be in (0, 1)");
  SplitRng rng(cfg.seed, trial_seed);
  return score_trial(compute_trial(cfg, mode, rng, detail), cfg, duplex);
}

SeResult estimate_se(const std::vector<TrialOutcome>& trials, double c_d, double c_u,
                     const DuplexSpec& duplex) {
  if (trials.empty()) throw std::invalid_argument("estimate_se: no trials");
  if (!(duplex.fd_fronthaul_split > 0.0 && duplex.fd_fronthaul_split < 1.0))
    throw std::invalid_argument("estimate_se: fd_fronthaul_split must be in (0, 1)");
  if (c_d < 0.0 || c_u < 0.0)
    throw std::invalid_argument("estimate_se: capacities must be >= 0");

  const bool fd = duplex.mode == Duplex::fd;
  const double cap_dl = fd ? c_d * duplex.fd_fronthaul_split : c_d;
  const double cap_ul = fd ? c_u * (1.0 - duplex.fd_fronthaul_split) : c_u;
  const double block = fd ? 1.0 : 0.5;  // HD serves a direction every other block

  long double sum_d = 0.0, sq_d = 0.0, sum_u = 0.0, sq_u = 0.0;
  for (const auto& t : trials) {
    const double se_d = block * std::min(std::log1p(t.dl_sinr), cap_dl);
    const double se_u = block * std::min(std::log1p(t.ul_sinr), cap_ul);
    sum_d += se_d;
    sq_d += static_cast<long double>(se_d) * se_d;
    sum_u += se_u;
    sq_u += static_cast<long double>(se_u) * se_u;
  }
  const auto n = static_cast<long double>(trials.size());

  SeResult r;
  r.method = SeMethod::mc;
  r.se_basis = "conditional_nonempty";
  r.dl_se = static_cast<double>(sum_d / n);
  r.ul_se = static_cast<double>(sum_u / n);
  if (trials.size() > 1) {
    const long double var_d = std::max<long double>(0.0, (sq_d - sum_d * sum_d / n) / (n - 1));
    const long double var_u = std::max<long double>(0.0, (sq_u - sum_u * sum_u / n) / (n - 1));
    r.dl_error = static_cast<double>(std::sqrt(static_cast<double>(var_d / n)));
    r.ul_error = static_cast<double>(std::sqrt(static_cast<double>(var_u / n)));
  }
  return r;
}

SimulationSummary simulate(const NetworkConfig& cfg, ClusterMode mode,
                           const DuplexSpec& duplex) {
  int workers = 1;
  const auto raw = simulate_raw(cfg, mode, &workers);
  return summarize(raw, cfg, mode, duplex, workers);
}

std::pair<SimulationSummary, SimulationSummary> simulate_fd_hd(const NetworkConfig& cfg,
                                                               ClusterMode mode,
                                                               double fd_split) {
  int workers = 1;
  const auto raw = simulate_raw(cfg, mode, &workers);
  const DuplexSpec fd{Duplex::fd, fd_split};
  const DuplexSpec hd{Duplex::hd, fd_split};
  return {summarize(raw, cfg, mode, fd, workers), summarize(raw, cfg, mode, hd, workers)};
}

std::vector<std::pair<SimulationSummary, SimulationSummary>> simulate_capacity_sweep(
    const NetworkConfig& cfg, ClusterMode mode, const std::vector<double>& caps,
    double fd_split) {
  for (double cap : caps)
    if (std::isnan(cap) || cap < 0.0)
      throw std::invalid_argument("simulate_capacity_sweep: caps must be >= 0");
  int workers = 1;
  const auto raw = simulate_raw(cfg, mode, &workers);
  const DuplexSpec fd{Duplex::fd, fd_split};
  const DuplexSpec hd{Duplex::hd, fd_split};
  std::vector<std::pair<SimulationSummary, SimulationSummary>> out;
  out.reserve(caps.size());
  for (double cap : caps) {
    NetworkConfig c = cfg;
    c.c_d = cap;
    c.c_u = cap;
    out.emplace_back(summarize(raw, c, mode, fd, workers), summarize(raw, c, mode, hd, workers));
  }
  return out;
}

}  // namespace fdcran
