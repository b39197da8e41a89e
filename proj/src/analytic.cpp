#include "fdcran/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "fdcran/geometry.hpp"
#include "fdcran/special.hpp"

namespace fdcran {

namespace {

using cd = std::complex<double>;

cd pow_principal(cd base, double expo) {
  if (base == cd{0.0, 0.0}) return (expo > 0.0) ? cd{0.0, 0.0} : cd{INFINITY, 0.0};
  return std::exp(expo * std::log(base));
}

// 1 - (1 + w)^-P without cancellation for small |w|
cd one_minus_pow(cd w, double P) {
  if (std::abs(w) < 1e-4) {
    cd w2 = w * w;
    return P * w - 0.5 * P * (P + 1.0) * w2 + P * (P + 1.0) * (P + 2.0) / 6.0 * w2 * w -
           P * (P + 1.0) * (P + 2.0) * (P + 3.0) / 24.0 * w2 * w2;
  }
  return 1.0 - pow_principal(1.0 + w, -P);
}

// Gauss series minus its leading 1, for results that would otherwise cancel.
cd gauss_series_m1(double a, double b, double c, cd z) {
  cd term{1.0, 0.0};
  cd sum{0.0, 0.0};
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
  throw std::runtime_error("f2_integral: series did not converge");
}

void check_fparams(double p, double alpha, double P, double Q) {
  if (!(p > 0.0)) throw std::invalid_argument("power must be positive");
  if (!(alpha > 2.0)) throw std::invalid_argument("path-loss exponent must exceed 2");
  if (!(P > 0.0) || !(Q > 0.0)) throw std::invalid_argument("P and Q must be positive");
}

// closed forms on their native series side; callers dispatch on |argument|
cd f1_direct(double alpha, double P, double T, cd w) {
  cd hyp = hyp2f1(P, P + 2.0 / alpha, P + 2.0 / alpha + 1.0, w);
  cd lead = 2.0 / (alpha * P + 2.0) * pow_principal(-w, P) * hyp;
  return 0.5 * T * T * (1.0 - lead);
}

cd f2_direct(double alpha, double P, double T, cd u) {
  if (std::abs(u) <= 0.9)
    return 0.5 * T * T * gauss_series_m1(-2.0 / alpha, P, 1.0 - 2.0 / alpha, u);
  return 0.5 * T * T * (hyp2f1(-2.0 / alpha, P, 1.0 - 2.0 / alpha, u) - 1.0);
}

}  // namespace

std::complex<double> plane_integral(std::complex<double> z, double p, double alpha, double P,
                                    double Q) {
  check_fparams(p, alpha, P, Q);
  if (z == cd{0.0, 0.0}) return {0.0, 0.0};
  double gammas =
      std::tgamma(1.0 - 2.0 / alpha) * std::tgamma(P + 2.0 / alpha) / std::tgamma(P);
  return 0.5 * pow_principal(z * (p * Q), 2.0 / alpha) * gammas;
}

std::complex<double> f1_integral(std::complex<double> z, double p, double alpha, double P,
                                 double Q, double T) {
  check_fparams(p, alpha, P, Q);
  if (T < 0.0) throw std::invalid_argument("f1_integral: negative radius");
  if (T == 0.0 || z == cd{0.0, 0.0}) return {0.0, 0.0};
  cd w = -std::pow(T, alpha) / (z * p * Q);
  if (std::abs(w) <= 1.0) return f1_direct(alpha, P, T, w);
  return plane_integral(z, p, alpha, P, Q) - f2_direct(alpha, P, T, 1.0 / w);
}

std::complex<double> f2_integral(std::complex<double> z, double p, double alpha, double P,
                                 double Q, double T) {
  check_fparams(p, alpha, P, Q);
  if (T < 0.0) throw std::invalid_argument("f2_integral: negative radius");
  if (z == cd{0.0, 0.0}) return {0.0, 0.0};
  if (T == 0.0) return plane_integral(z, p, alpha, P, Q);
  cd u = -(z * p * Q) / std::pow(T, alpha);
  if (std::abs(u) <= 1.0) return f2_direct(alpha, P, T, u);
  return plane_integral(z, p, alpha, P, Q) - f1_direct(alpha, P, T, 1.0 / u);
}

namespace {

// shared integrand of both defining integrals, overflow-safe at r -> 0
cd radial_integrand(double r, cd z, double p, double alpha, double P, double Q) {
  double log_mag = std::log(std::abs(z) * p * Q) - alpha * std::log(r);
  if (log_mag > 230.0) return {r, 0.0};  // power term underflows to 0
  cd w = z * p * Q * std::pow(r, -alpha);
  return r * one_minus_pow(w, P);
}

std::vector<double> radial_breakpoints(double lo, double hi, double rstar) {
  std::vector<double> pts{lo};
  for (double f : {1e-2, 1e-1, 1.0, 1e1, 1e2}) {
    double b = rstar * f;
    if (b > lo && b < hi) pts.push_back(b);
  }
  pts.push_back(hi);
  return pts;
}

}  // namespace

std::complex<double> f1_integral_quad(std::complex<double> z, double p, double alpha, double P,
                                      double Q, double T, const QuadratureSpec& spec) {
  check_fparams(p, alpha, P, Q);
  if (T <= 0.0 || z == cd{0.0, 0.0}) return {0.0, 0.0};
  double rstar = std::pow(std::abs(z) * p * Q, 1.0 / alpha);
  cd total{0.0, 0.0};
  auto pts = radial_breakpoints(0.0, T, rstar);
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    auto r = integrate([&](double rr) { return radial_integrand(rr, z, p, alpha, P, Q); },
                       pts[i], pts[i + 1], spec);
    total += r.value;
  }
  return total;
}

std::complex<double> f2_integral_quad(std::complex<double> z, double p, double alpha, double P,
                                      double Q, double T, const QuadratureSpec& spec) {
  check_fparams(p, alpha, P, Q);
  if (z == cd{0.0, 0.0}) return {0.0, 0.0};
  if (!(T > 0.0)) throw std::invalid_argument("f2_integral_quad: needs T > 0");
  // substitute r = T/v so the infinite tail becomes v in (0, 1]
  double vstar = std::min(1.0, std::pow(std::abs(z) * p * Q / std::pow(T, alpha), 1.0 / alpha));
  cd total{0.0, 0.0};
  auto integrand = [&](double v) -> cd {
    cd w = z * p * Q * std::pow(v, alpha) / std::pow(T, alpha);
    return one_minus_pow(w, P) / (v * v * v);
  };
  std::vector<double> pts{0.0};
  for (double b : {1e-4, 1e-2, 0.1 * vstar, vstar, 10.0 * vstar}) {
    if (b > pts.back() && b < 1.0) pts.push_back(b);
  }
  pts.push_back(1.0);
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    auto r = integrate(integrand, pts[i], pts[i + 1], spec);
    total += r.value;
  }
  return T * T * total;
}

// ---------------------------------------------------------------------------
// model evaluator
// ---------------------------------------------------------------------------

namespace {

struct MgfKey {
  int which;
  std::uint64_t zre, zim, dd;
  bool operator==(const MgfKey& o) const {
    return which == o.which && zre == o.zre && zim == o.zim && dd == o.dd;
  }
};

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

struct MgfKeyHash {
  size_t operator()(const MgfKey& k) const {
    std::uint64_t h = mix64(static_cast<std::uint64_t>(k.which));
    h = mix64(h ^ k.zre);
    h = mix64(h ^ k.zim);
    h = mix64(h ^ k.dd);
    return static_cast<size_t>(h);
  }
};

std::uint64_t dbits(double v) {
  std::uint64_t u;
  static_assert(sizeof(u) == sizeof(v));
  std::memcpy(&u, &v, sizeof(u));
  return u;
}

}  // namespace

struct AnalyticModel::Cache {
  std::mutex mu;
  std::unordered_map<MgfKey, cd, MgfKeyHash> values;
};

AnalyticModel::AnalyticModel(const NetworkConfig& cfg, const QuadratureSpec& quad,
                             int theta_order, int y_order)
    : cfg_(cfg), quad_(quad), theta_order_(theta_order), y_order_(y_order),
      cache_(std::make_shared<Cache>()) {
  cfg_.validate();
  if (theta_order_ < 4 || y_order_ < 4)
    throw std::invalid_argument("analytic model: rule orders too small");
  radius_ = cfg_.cluster_radius();
  mean_size_ = cfg_.mean_cluster_size();
  lambda_u_ = cfg_.ue_density();
  exclusion_ = cfg_.exclusion_radius();
}

AnalyticModel::AnalyticModel(const AnalyticModel& other, Duplex duplex)
    : cfg_(other.cfg_), quad_(other.quad_), theta_order_(other.theta_order_),
      y_order_(other.y_order_), cache_(other.cache_) {
  cfg_.duplex = duplex;
  radius_ = other.radius_;
  mean_size_ = other.mean_size_;
  lambda_u_ = other.lambda_u_;
  exclusion_ = other.exclusion_;
}

AnalyticModel AnalyticModel::with_duplex(Duplex duplex) const {
  return AnalyticModel(*this, duplex);
}

double AnalyticModel::signal_atom() const { return std::exp(-mean_size_); }

double AnalyticModel::interference_atom_dl() const {
  double ici = (cfg_.lambda_d > 0.0) ? 0.0 : 1.0;
  bool cmi_active = cfg_.duplex == Duplex::fd && lambda_u_ > 0.0;
  double cmi = cmi_active ? 0.0 : 1.0;
  return ici * cmi;
}

double AnalyticModel::interference_atom_ul() const {
  double ici = (cfg_.lambda_d > 0.0 && lambda_u_ > 0.0) ? std::exp(-mean_size_) : 1.0;
  bool cmi_active = cfg_.duplex == Duplex::fd && cfg_.lambda_d > 0.0;
  double cmi = cmi_active ? std::exp(-mean_size_) : 1.0;
  return ici * cmi;
}

std::complex<double> AnalyticModel::cached(int which, std::complex<double> z, double d,
                                           const std::function<std::complex<double>()>& eval) const {
  MgfKey key{which, dbits(z.real()), dbits(z.imag()), dbits(d)};
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->values.find(key);
    if (it != cache_->values.end()) return it->second;
  }
  cd v = eval();
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->values.emplace(key, v);
  return v;
}

// 2 * GL integral over theta in [-pi/2, pi/2]; the integrand depends on
// theta through (cos^2, sin) only, so it is symmetric about pi/2 and the
// half-range rule covers the full circle.
std::complex<double> AnalyticModel::theta_f1(std::complex<double> z, double p, double P,
                                             double y) const {
  return 2.0 * gl_integrate(
                   [&](double th) {
                     return f1_integral(z, p, cfg_.alpha, P, 1.0, xi(y, th, radius_));
                   },
                   -M_PI / 2.0, M_PI / 2.0, theta_order_);
}

std::complex<double> AnalyticModel::theta_f2(std::complex<double> z, double p, double P,
                                             double y) const {
  return 2.0 * gl_integrate(
                   [&](double th) {
                     return f2_integral(z, p, cfg_.alpha, P, 1.0, xi(y, th, radius_));
                   },
                   -M_PI / 2.0, M_PI / 2.0, theta_order_);
}

// exponent of the doubly-integrated MGFs: 2 pi lambda_d int_0^R
// (1 - exp(-inner_density * theta_f2)) y dy
std::complex<double> AnalyticModel::nested_exponent(std::complex<double> z, double p, double P,
                                                    double inner_density) const {
  if (inner_density <= 0.0 || cfg_.lambda_d <= 0.0) return {0.0, 0.0};
  cd inner = gl_integrate(
      [&](double y) -> cd {
        return (1.0 - std::exp(-inner_density * theta_f2(z, p, P, y))) * y;
      },
      0.0, radius_, y_order_);
  return 2.0 * M_PI * cfg_.lambda_d * inner;
}

std::complex<double> AnalyticModel::mgf_x_dl_dj(std::complex<double> z, double d) const {
  if (z == cd{0.0, 0.0}) return {1.0, 0.0};
  double P = cfg_.n_d - cfg_.k_d + 1.0 / mean_size_;
  return cached(0, z, d, [&] { return std::exp(-cfg_.lambda_d * theta_f1(z, cfg_.p_d, P, d)); });
}

std::complex<double> AnalyticModel::mgf_x_ul_dj(std::complex<double> z, double d) const {
  if (z == cd{0.0, 0.0}) return {1.0, 0.0};
  double P = cfg_.n_u - cfg_.k_u + 1.0 / mean_size_;
  return cached(1, z, d, [&] { return std::exp(-cfg_.lambda_d * theta_f1(z, cfg_.p_u, P, d)); });
}

std::complex<double> AnalyticModel::mgf_ici_dl_dj(std::complex<double> z, double d) const {
  if (z == cd{0.0, 0.0}) return {1.0, 0.0};
  return cached(2, z, d, [&] {
    return std::exp(-cfg_.lambda_d * theta_f2(z, cfg_.p_d, static_cast<double>(cfg_.k_d), d));
  });
}

std::complex<double> AnalyticModel::ici_ul_exponent(std::complex<double> z) const {
  if (z == cd{0.0, 0.0} || lambda_u_ <= 0.0) return {0.0, 0.0};
  return cached(9, z, 0.0,
                [&] { return nested_exponent(z, cfg_.p_u, 1.0 / mean_size_, lambda_u_); });
}

std::complex<double> AnalyticModel::mgf_ici_ul(std::complex<double> z) const {
  return std::exp(-ici_ul_exponent(z));
}

std::complex<double> AnalyticModel::mgf_cmi_dl(std::complex<double> z) const {
  if (z == cd{0.0, 0.0} || lambda_u_ <= 0.0) return {1.0, 0.0};
  return cached(4, z, 0.0, [&] {
    cd f = (exclusion_ > 0.0)
               ? f2_integral(z, cfg_.p_u, cfg_.alpha, 1.0, 1.0, exclusion_)
               : plane_integral(z, cfg_.p_u, cfg_.alpha, 1.0, 1.0);
    return std::exp(-2.0 * M_PI * lambda_u_ * f);
  });
}

std::complex<double> AnalyticModel::cmi_ul_exponent(std::complex<double> z) const {
  if (z == cd{0.0, 0.0}) return {0.0, 0.0};
  return cached(10, z, 0.0, [&] {
    return nested_exponent(z, cfg_.p_d, cfg_.k_d / mean_size_, cfg_.lambda_d);
  });
}

std::complex<double> AnalyticModel::mgf_cmi_ul(std::complex<double> z) const {
  return std::exp(-cmi_ul_exponent(z));
}

std::complex<double> AnalyticModel::ul_exponent(std::complex<double> z) const {
  cd e = ici_ul_exponent(z);
  if (cfg_.duplex == Duplex::fd) e += cmi_ul_exponent(z);
  return e;
}

std::complex<double> AnalyticModel::mgf_x_dl_uc(std::complex<double> z) const {
  if (z == cd{0.0, 0.0}) return {1.0, 0.0};
  double P = cfg_.n_d - cfg_.k_d + 1.0 / mean_size_;
  return cached(6, z, 0.0, [&] {
    return std::exp(-2.0 * M_PI * cfg_.lambda_d *
                    f1_integral(z, cfg_.p_d, cfg_.alpha, P, 1.0, radius_));
  });
}

std::complex<double> AnalyticModel::mgf_x_ul_uc(std::complex<double> z) const {
  if (z == cd{0.0, 0.0}) return {1.0, 0.0};
  double P = cfg_.n_u - cfg_.k_u + 1.0 / mean_size_;
  return cached(7, z, 0.0, [&] {
    return std::exp(-2.0 * M_PI * cfg_.lambda_d *
                    f1_integral(z, cfg_.p_u, cfg_.alpha, P, 1.0, radius_));
  });
}

std::complex<double> AnalyticModel::mgf_ici_dl_uc(std::complex<double> z) const {
  if (z == cd{0.0, 0.0}) return {1.0, 0.0};
  return cached(8, z, 0.0, [&] {
    return std::exp(-2.0 * M_PI * cfg_.lambda_d *
                    f2_integral(z, cfg_.p_d, cfg_.alpha, static_cast<double>(cfg_.k_d), 1.0,
                                radius_));
  });
}

std::complex<double> AnalyticModel::mgf_ici_ul_uc(std::complex<double> z) const {
  return mgf_ici_ul(z);
}

std::complex<double> AnalyticModel::interference_product_dl(std::complex<double> z,
                                                            double d) const {
  cd ici = (cfg_.clustering == ClusterMode::user_centric) ? mgf_ici_dl_uc(z)
                                                          : mgf_ici_dl_dj(z, d);
  if (cfg_.duplex == Duplex::fd) ici *= mgf_cmi_dl(z);
  return ici;
}

std::complex<double> AnalyticModel::interference_product_ul(std::complex<double> z,
                                                            double /*d*/) const {
  cd ici = mgf_ici_ul(z);
  if (cfg_.duplex == Duplex::fd) ici *= mgf_cmi_ul(z);
  return ici;
}

// ---------------------------------------------------------------------------
// Gil-Pelaez machinery
// ---------------------------------------------------------------------------

namespace {

// find t with |fn(t) - limit| = half of |fn(0+) - limit| on the real axis;
// coarse log-space bisection, the result only steers panel placement
double half_decay_scale(const std::function<cd(double)>& fn, double limit) {
  double base = std::abs(fn(1e-300) - limit);
  if (base < 1e-12) return 1.0;
  double target = 0.5 * base;
  auto h = [&](double t) { return std::abs(fn(t) - limit); };
  double lo = 1.0, hi = 1.0;
  if (h(1.0) > target) {
    for (int i = 0; i < 60 && h(hi) > target; ++i) hi *= 10.0;
    lo = hi / 10.0;
  } else {
    for (int i = 0; i < 60 && h(lo) <= target; ++i) lo /= 10.0;
    hi = lo * 10.0;
  }
  for (int i = 0; i < 16; ++i) {
    double mid = std::sqrt(lo * hi);
    (h(mid) > target ? lo : hi) = mid;
  }
  return std::sqrt(lo * hi);
}

struct GpInput {
  std::function<cd(cd)> signal;        // M_X at arbitrary complex argument
  std::function<cd(cd)> interference;  // combined interference MGF
  double atom;                         // P{X = 0}
  double noise;
  double signal_scale;        // real-axis half-decay argument of the signal MGF
  double interference_scale;  // same for the interference product
};

// F(x) = 1/2 + A/2 - (1/pi) int_0^inf Im((M_X(-js/x) - A) P_I(js) e^{-js nu}) / s ds
double gp_invert(double x, const GpInput& in, const QuadratureSpec& quad, GilPelaezDiag* diag) {
  GilPelaezDiag local;
  GilPelaezDiag& dg = diag ? *diag : local;
  dg = GilPelaezDiag{};

  const double A = in.atom;
  auto integrand = [&](double s) -> double {
    cd sig = in.signal(cd{0.0, -s / x}) - A;
    cd rest = in.interference(cd{0.0, s}) * std::exp(cd{0.0, -s * in.noise});
    return (sig * rest).imag() / s;
  };

  const double s_sig = x * in.signal_scale;
  const double s_lo = std::min(s_sig, in.interference_scale);
  const double s_hi = std::max(s_sig, in.interference_scale);

  QuadratureSpec panel_spec = quad;
  panel_spec.abs_tol = std::max(quad.abs_tol / 16.0, 1e-300);

  double total = 0.0;
  double s_end = 1e-3 * s_lo;
  {
    auto r = integrate_real(integrand, 0.0, s_end, panel_spec);
    total += r.value;
    dg.quad_error += r.error;
    dg.evaluations += r.evaluations;
  }
  auto envelope = [&](double s) {
    return std::abs(in.signal(cd{0.0, -s / x}) - A) * std::abs(in.interference(cd{0.0, s}));
  };
  double prev_env = envelope(s_end);
  const int max_panels = 240;
  for (int k = 0; k < max_panels; ++k) {
    double s_next = 2.0 * s_end;
    bool capped = quad.s_truncation > 0.0 && s_next >= quad.s_truncation;
    if (capped) s_next = quad.s_truncation;
    auto r = integrate_real(integrand, s_end, s_next, panel_spec);
    total += r.value;
    dg.quad_error += r.error;
    dg.evaluations += r.evaluations;
    s_end = s_next;
    double env = envelope(s_end);
    if (s_end > 8.0 * s_hi || env < 1e-18) {
      double rho = (prev_env > 0.0) ? env / prev_env : 0.0;
      double tail = (rho < 1.0 && rho >= 0.0) ? env * M_LN2 * rho / (1.0 - rho)
                                              : env * M_LN2 * 40.0;
      if (env < 1e-18) tail = 0.0;
      if (tail < quad.abs_tol || capped || k == max_panels - 1) {
        dg.tail_bound = tail;
        dg.truncated_early = capped && tail >= quad.abs_tol;
        break;
      }
    }
    if (capped) {
      dg.tail_bound = prev_env * M_LN2 * 40.0;
      dg.truncated_early = true;
      break;
    }
    prev_env = env;
  }
  dg.s_max = s_end;
  return 0.5 + 0.5 * A - total / M_PI;
}

}  // namespace

// ---------------------------------------------------------------------------
// UL interference-product surrogate
// ---------------------------------------------------------------------------
// The UL interference MGFs are nested double quadratures and the CDF
// inversion asks for them hundreds of times per threshold, always along one
// of two rays (js for the inversion, real z for the infinite-fronthaul
// integral). The product is independent of x and d, so per ray we tabulate
// chi(u) = log psi(e^u) with psi the product's exponent on Chebyshev-Lobatto
// nodes in u = ln s and evaluate by barycentric interpolation. Working on
// log psi keeps the accuracy relative in the exponent, so the error in the
// MGF fades exactly where the MGF flattens toward 1 or toward its atom.

struct UlProductInterp {
  bool usable = false;    // spot checks against the exact product passed
  bool identity = false;  // product is identically one
  double u_lo = 0.0, u_hi = 0.0;
  std::vector<double> x_nodes;         // cos(k pi / n), k = 0..n
  std::vector<std::complex<double>> chi;

  std::complex<double> exponent(double s) const {
    double u = std::clamp(std::log(s), u_lo, u_hi);
    double x = (2.0 * u - (u_lo + u_hi)) / (u_hi - u_lo);
    const int n = static_cast<int>(chi.size()) - 1;
    cd num{0.0, 0.0}, den{0.0, 0.0};
    for (int k = 0; k <= n; ++k) {
      double diff = x - x_nodes[k];
      if (std::abs(diff) < 1e-14) return std::exp(chi[k]);
      double w = (k % 2 == 0) ? 1.0 : -1.0;
      if (k == 0 || k == n) w *= 0.5;
      num += (w / diff) * chi[k];
      den += w / diff;
    }
    return std::exp(num / den);
  }
};

std::shared_ptr<const UlProductInterp> AnalyticModel::build_ul_interp(bool imag_axis) const {
  auto out = std::make_shared<UlProductInterp>();
  const bool ici_active = lambda_u_ > 0.0;
  const bool cmi_active = cfg_.duplex == Duplex::fd;
  if (!ici_active && !cmi_active) {
    out->identity = true;
    return out;
  }
  // Re(exponent) >= 0 for any MGF argument with Re z >= 0; a grazing negative
  // from quadrature roundoff would put log() on the wrong branch, so clip it
  auto psi = [&](double s) -> cd {
    cd e = ul_exponent(imag_axis ? cd{0.0, s} : cd{s, 0.0});
    double re = std::max(e.real(), 0.0);
    if (re == 0.0 && e.imag() == 0.0) re = 1e-290;
    return {re, e.imag()};
  };
  // center the grid on the real-axis half-decay point of the product; twelve
  // decades to either side covers every argument the inversion panels visit,
  // and the clamp in exponent() returns the settled endpoint values beyond
  double s_ref = half_decay_scale(
      [&](double t) { return std::exp(-ul_exponent(cd{t, 0.0})); }, interference_atom_ul());
  if (!(s_ref > 0.0) || !std::isfinite(s_ref)) s_ref = 1.0;
  out->u_lo = std::log(s_ref) - 12.0 * std::log(10.0);
  out->u_hi = std::log(s_ref) + 12.0 * std::log(10.0);
  // the imaginary-axis exponent carries the phase structure of the product
  // and needs the denser grid; on the real axis everything is monotone
  const int n = imag_axis ? 384 : 192;
  out->x_nodes.resize(n + 1);
  out->chi.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    double xk = std::cos(M_PI * static_cast<double>(k) / n);
    out->x_nodes[k] = xk;
    double u = 0.5 * (out->u_lo + out->u_hi) + 0.5 * (out->u_hi - out->u_lo) * xk;
    cd v = psi(std::exp(u));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return out;  // stays unusable
    out->chi[k] = std::log(v);
  }
  // spot-check the surrogate against the exact product at off-node arguments;
  // any miss leaves it unusable and callers fall back to exact evaluation
  const double offsets[] = {-10.6, -7.9, -5.3, -2.6, -1.1, 0.7, 2.9, 5.8, 9.4};
  for (double o : offsets) {
    double s = s_ref * std::pow(10.0, o);
    cd approx = std::exp(-out->exponent(s));
    cd exact = std::exp(-ul_exponent(imag_axis ? cd{0.0, s} : cd{s, 0.0}));
    if (std::getenv("FDCRAN_DEBUG_INTERP"))
      std::fprintf(stderr, "interp axis=%d off=%.1f s=%.3e |d|=%.3e exact=(%.6e,%.6e)\n",
                   imag_axis ? 1 : 0, o, s, std::abs(approx - exact), exact.real(),
                   exact.imag());
    if (!(std::abs(approx - exact) <= 1e-7 * (1.0 + std::abs(exact)))) return out;
  }
  out->usable = true;
  return out;
}

std::complex<double> AnalyticModel::ul_interference_fast(std::complex<double> z) const {
  if (z == cd{0.0, 0.0}) return {1.0, 0.0};
  const bool imag_axis = z.real() == 0.0 && z.imag() > 0.0;
  const bool real_axis = z.imag() == 0.0 && z.real() > 0.0;
  if (!imag_axis && !real_axis) return interference_product_ul(z, 0.0);
  std::shared_ptr<const UlProductInterp> ip;
  {
    std::lock_guard<std::mutex> lock(interp_mu_);
    ip = imag_axis ? ul_interp_imag_ : ul_interp_real_;
  }
  if (!ip) {
    auto built = build_ul_interp(imag_axis);
    std::lock_guard<std::mutex> lock(interp_mu_);
    auto& slot = imag_axis ? ul_interp_imag_ : ul_interp_real_;
    if (!slot) slot = built;
    ip = slot;
  }
  if (ip->identity) return {1.0, 0.0};
  if (!ip->usable) return interference_product_ul(z, 0.0);
  double s = imag_axis ? z.imag() : z.real();
  return std::exp(-ip->exponent(s));
}

double AnalyticModel::coverage(double x, double d, bool downlink) const {
  if (!(x > 0.0)) return 1.0 - signal_atom();
  const bool uc = cfg_.clustering == ClusterMode::user_centric;
  const int dir = downlink ? 0 : 1;

  GpInput in;
  if (downlink) {
    in.signal = uc ? std::function<cd(cd)>([this](cd z) { return mgf_x_dl_uc(z); })
                   : std::function<cd(cd)>([this, d](cd z) { return mgf_x_dl_dj(z, d); });
    in.interference = [this, d](cd z) { return interference_product_dl(z, d); };
    in.noise = cfg_.dl_noise_effective();
  } else {
    in.signal = uc ? std::function<cd(cd)>([this](cd z) { return mgf_x_ul_uc(z); })
                   : std::function<cd(cd)>([this, d](cd z) { return mgf_x_ul_dj(z, d); });
    in.interference = [this](cd z) { return ul_interference_fast(z); };
    in.noise = cfg_.ul_noise_effective();
  }
  in.atom = signal_atom();

  {
    std::lock_guard<std::mutex> lock(scale_mu_);
    in.signal_scale = signal_scale_[dir];
    in.interference_scale = interference_scale_[dir];
  }
  // scale probes run once per direction; under disjoint clustering the
  // signal scale is taken at the probe's own d and reused (panel placement
  // only, correctness is unaffected)
  if (in.signal_scale == 0.0) {
    double s_scale =
        half_decay_scale([&](double t) { return in.signal(cd{t, 0.0}); }, in.atom);
    double i_atom = downlink ? interference_atom_dl() : interference_atom_ul();
    double i_scale =
        half_decay_scale([&](double t) { return in.interference(cd{t, 0.0}); }, i_atom);
    std::lock_guard<std::mutex> lock(scale_mu_);
    signal_scale_[dir] = s_scale;
    interference_scale_[dir] = i_scale;
    in.signal_scale = s_scale;
    in.interference_scale = i_scale;
  }
  double f = gp_invert(x, in, quad_, nullptr);
  return std::clamp(1.0 - f, 0.0, 1.0);
}

double AnalyticModel::coverage_dl(double x, double d) const { return coverage(x, d, true); }
double AnalyticModel::coverage_ul(double x, double d) const { return coverage(x, d, false); }

double gil_pelaez_cdf(double x,
                      const std::function<std::complex<double>(std::complex<double>)>& signal_mgf,
                      const std::vector<std::function<std::complex<double>(std::complex<double>)>>& interference_mgfs,
                      double noise, const QuadratureSpec& quad, double signal_atom,
                      GilPelaezDiag* diag) {
  if (!(x > 0.0)) throw std::invalid_argument("gil_pelaez_cdf: threshold must be positive");
  GpInput in;
  in.signal = signal_mgf;
  in.interference = [&interference_mgfs](cd z) {
    cd prod{1.0, 0.0};
    for (const auto& m : interference_mgfs) prod *= m(z);
    return prod;
  };
  in.noise = noise;

  if (signal_atom >= 0.0) {
    in.atom = signal_atom;
  } else {
    // Aitken extrapolation of the real-axis limit; the continuous part can
    // decay slowly, so plain probing of M at large z is not enough
    double scale = half_decay_scale([&](double t) { return signal_mgf(cd{t, 0.0}); }, 0.0);
    double m0 = signal_mgf(cd{scale * 1e4, 0.0}).real();
    double m1 = signal_mgf(cd{scale * 1e6, 0.0}).real();
    double m2 = signal_mgf(cd{scale * 1e8, 0.0}).real();
    double denom = (m2 - m1) - (m1 - m0);
    double a = (std::abs(denom) > 1e-14) ? m2 - (m2 - m1) * (m2 - m1) / denom : m2;
    in.atom = std::clamp(std::abs(a) < 1e-7 ? 0.0 : a, 0.0, 1.0 - 1e-12);
  }
  in.signal_scale = half_decay_scale([&](double t) { return signal_mgf(cd{t, 0.0}); }, in.atom);
  in.interference_scale =
      half_decay_scale([&](double t) { return in.interference(cd{t, 0.0}); },
                       std::abs(in.interference(cd{1e200, 0.0})) < 2.0
                           ? in.interference(cd{1e200, 0.0}).real()
                           : 0.0);
  double f = gp_invert(x, in, quad, diag);
  return std::clamp(f, 0.0, 1.0);
}

// ---------------------------------------------------------------------------
// SE integrals
// ---------------------------------------------------------------------------

std::vector<double> se_cutset_grid(const std::function<double(double)>& cdf_fn,
                                   const std::vector<double>& caps,
                                   const QuadratureSpec& quad, double* error_estimate) {
  if (caps.empty()) {
    if (error_estimate) *error_estimate = 0.0;
    return {};
  }
  for (size_t i = 0; i < caps.size(); ++i) {
    if (!std::isfinite(caps[i]) || caps[i] < 0.0)
      throw std::invalid_argument("se_cutset_grid: caps must be finite and >= 0");
    if (i > 0 && caps[i] < caps[i - 1])
      throw std::invalid_argument("se_cutset_grid: caps must be ascending");
  }

  QuadratureSpec panel = quad;
  panel.max_subdivisions = std::max(quad.max_subdivisions, 300);

  // E{min(ln(1+sinr), C)} = int_0^C P{ln(1+sinr) > t} dt, walked in unit
  // panels so a grid of caps shares every whole panel below it
  auto cov_at = [&](double t) { return 1.0 - cdf_fn(std::expm1(t)); };
  const double cap_max = caps.back();
  std::vector<double> out;
  out.reserve(caps.size());
  double total = 0.0, err = 0.0, t0 = 0.0;
  bool tail_dead = false;  // coverage became negligible; remaining panels skipped
  for (double cap : caps) {
    if (!(cap > 0.0)) {
      out.push_back(0.0);
      continue;
    }
    while (!tail_dead && t0 + 1.0 <= cap) {
      auto r = integrate_real(cov_at, t0, t0 + 1.0, panel);
      total += r.value;
      err += r.error;
      t0 += 1.0;
      // coverage is nonincreasing in t, so cov(t0) * (cap_max - t0) bounds
      // everything still ahead. The bound is allowed to be looser than the
      // panel tolerance: resolving coverage much below ~1e-4 of the running
      // total means inverting at thresholds where the noise phase factor
      // oscillates across the whole inversion range, at prohibitive cost for
      // mass that cannot move the result. The truncated bound goes into the
      // error estimate.
      double bound = cov_at(t0) * (cap_max - t0);
      if (bound < std::max(0.1 * quad.abs_tol,
                           std::max(100.0 * quad.rel_tol, 1e-5) * total)) {
        err += bound;
        tail_dead = true;
      }
    }
    double v = total;
    if (!tail_dead && cap > t0) {
      auto r = integrate_real(cov_at, t0, cap, panel);
      v += r.value;
      err += r.error;
    }
    out.push_back(std::clamp(v, 0.0, cap));
  }
  if (error_estimate) *error_estimate = err;
  return out;
}

double se_cutset(const std::function<double(double)>& cdf_fn, double capacity,
                 const QuadratureSpec& quad, double* error_estimate) {
  if (std::isinf(capacity))
    throw std::invalid_argument("se_cutset: capacity must be finite, use the infinite-fronthaul path");
  if (!(capacity > 0.0)) return 0.0;
  return se_cutset_grid(cdf_fn, {capacity}, quad, error_estimate)[0];
}

namespace {

// per-direction infinite-fronthaul SE at one conditioning distance
double se_infinite_direction(const AnalyticModel& model, bool downlink, double d,
                             const QuadratureSpec& quad, double* err_out) {
  const NetworkConfig& cfg = model.config();
  const double nu = downlink ? cfg.dl_noise_effective() : cfg.ul_noise_effective();
  const double A = model.signal_atom();
  const double AI = downlink ? model.interference_atom_dl() : model.interference_atom_ul();
  const bool uc = cfg.clustering == ClusterMode::user_centric;

  auto sig = [&](double z) -> double {
    cd v = downlink ? (uc ? model.mgf_x_dl_uc(cd{z, 0.0}) : model.mgf_x_dl_dj(cd{z, 0.0}, d))
                    : (uc ? model.mgf_x_ul_uc(cd{z, 0.0}) : model.mgf_x_ul_dj(cd{z, 0.0}, d));
    return v.real();
  };
  auto intf = [&](double z) -> double {
    cd v = downlink ? model.interference_product_dl(cd{z, 0.0}, d)
                    : model.ul_interference_fast(cd{z, 0.0});
    return v.real();
  };
  auto integrand = [&](double z) -> double {
    return (1.0 - sig(z)) * intf(z) * std::exp(-z * nu) / z;
  };

  double t_sig = half_decay_scale([&](double t) { return cd{sig(t), 0.0}; }, A);
  double t_int = half_decay_scale([&](double t) { return cd{intf(t), 0.0}; }, AI);
  double z1 = 1e-3 * std::min(t_sig, t_int);

  QuadratureSpec panel_spec = quad;
  panel_spec.abs_tol = std::max(quad.abs_tol / 16.0, 1e-300);

  double total = 0.0, err = 0.0;
  {
    // z = z1 * u^(alpha/2) flattens the z^{2/alpha - 1} endpoint behavior
    const double q = cfg.alpha / 2.0;
    auto r = integrate_real(
        [&](double u) { return integrand(z1 * std::pow(u, q)) * z1 * q * std::pow(u, q - 1.0); },
        0.0, 1.0, panel_spec);
    total += r.value;
    err += r.error;
  }
  const double slab = (1.0 - A) * AI;  // integrand limit once both MGFs hit their atoms
  double z_end = z1;
  double prev_excess = INFINITY;
  for (int k = 0; k < 300; ++k) {
    double z_next = 2.0 * z_end;
    auto r = integrate_real(integrand, z_end, z_next, panel_spec);
    total += r.value;
    err += r.error;
    z_end = z_next;
    double excess = std::abs((1.0 - sig(z_end)) * intf(z_end) - slab);
    if (z_end > 8.0 * std::max(t_sig, t_int)) {
      double tail_if_stop = excess * expint_e1(std::max(z_end * nu, 1e-290));
      if (tail_if_stop < quad.abs_tol || excess < 1e-18 ||
          (excess < prev_excess * 0.9 && tail_if_stop < quad.rel_tol * std::abs(total))) {
        err += tail_if_stop;
        break;
      }
    }
    prev_excess = excess;
  }
  if (slab > 0.0) total += slab * expint_e1(std::max(z_end * nu, 1e-290));
  if (err_out) *err_out = err;
  return std::max(total, 0.0);
}

QuadratureSpec spec_from_config(const NetworkConfig& cfg) {
  QuadratureSpec q;
  q.rel_tol = cfg.rel_tol;
  q.abs_tol = cfg.abs_tol;
  return q;
}

// distance-average under disjoint clustering: d = R sqrt(u), u uniform
double average_over_distance(const std::function<double(double)>& f, double radius, int order) {
  return gl_integrate_real([&](double u) { return f(radius * std::sqrt(u)); }, 0.0, 1.0, order);
}

}  // namespace

SeResult se_infinite_fronthaul(const NetworkConfig& cfg, ClusterMode mode) {
  NetworkConfig c = cfg;
  c.clustering = mode;
  c.validate();
  QuadratureSpec quad = spec_from_config(c);
  AnalyticModel model(c, quad);

  SeResult out;
  out.method = SeMethod::analytic_infinite;
  out.empty_cluster_prob = model.signal_atom();
  const double half = (c.duplex == Duplex::hd) ? 0.5 : 1.0;

  double dl_err = 0.0, ul_err = 0.0;
  if (mode == ClusterMode::user_centric) {
    out.dl_se = half * se_infinite_direction(model, true, 0.0, quad, &dl_err);
    out.ul_se = half * se_infinite_direction(model, false, 0.0, quad, &ul_err);
  } else {
    out.dl_se = half * average_over_distance(
                           [&](double d) {
                             double e = 0.0;
                             double v = se_infinite_direction(model, true, d, quad, &e);
                             dl_err += e;
                             return v;
                           },
                           model.cluster_radius(), 12);
    out.ul_se = half * average_over_distance(
                           [&](double d) {
                             double e = 0.0;
                             double v = se_infinite_direction(model, false, d, quad, &e);
                             ul_err += e;
                             return v;
                           },
                           model.cluster_radius(), 12);
  }
  out.dl_error = dl_err;
  out.ul_error = ul_err;
  return out;
}

namespace {

SeResult se_cutset_mode(const NetworkConfig& cfg, const QuadratureSpec& quad, ClusterMode mode) {
  NetworkConfig c = cfg;
  c.clustering = mode;
  c.validate();

  const double half = (c.duplex == Duplex::hd) ? 0.5 : 1.0;
  const bool fd = (c.duplex == Duplex::fd);
  // FD shares each fronthaul link between the directions; HD dedicates the
  // link to the active direction per block
  const double cd_eff = fd ? c.c_d * c.fd_split : c.c_d;
  const double cu_eff = fd ? c.c_u * (1.0 - c.fd_split) : c.c_u;

  if (std::isinf(cd_eff) && std::isinf(cu_eff)) {
    SeResult r = se_infinite_fronthaul(c, mode);
    return r;
  }

  AnalyticModel model(c, quad);
  SeResult out;
  out.method = SeMethod::analytic_cutset;
  out.empty_cluster_prob = model.signal_atom();

  auto one_direction = [&](bool downlink, double cap, double* err) -> double {
    if (std::isinf(cap)) {
      // mixed case: this direction is unconstrained
      if (mode == ClusterMode::user_centric)
        return se_infinite_direction(model, downlink, 0.0, quad, err);
      double acc = 0.0;
      double v = average_over_distance(
          [&](double d) {
            double e = 0.0;
            double s = se_infinite_direction(model, downlink, d, quad, &e);
            acc += e;
            return s;
          },
          model.cluster_radius(), 12);
      if (err) *err = acc;
      return v;
    }
    if (mode == ClusterMode::user_centric) {
      auto cdf = [&](double x) {
        return 1.0 - (downlink ? model.coverage_dl(x, 0.0) : model.coverage_ul(x, 0.0));
      };
      return se_cutset(cdf, cap, quad, err);
    }
    double acc_err = 0.0;
    double v = average_over_distance(
        [&](double d) {
          auto cdf = [&](double x) {
            return 1.0 - (downlink ? model.coverage_dl(x, d) : model.coverage_ul(x, d));
          };
          double e = 0.0;
          double s = se_cutset(cdf, cap, quad, &e);
          acc_err += e;
          return s;
        },
        model.cluster_radius(), 12);
    if (err) *err = acc_err;
    return v;
  };

  double dl_err = 0.0, ul_err = 0.0;
  out.dl_se = half * one_direction(true, cd_eff, &dl_err);
  out.ul_se = half * one_direction(false, cu_eff, &ul_err);
  out.dl_error = dl_err;
  out.ul_error = ul_err;
  return out;
}

}  // namespace

std::vector<SeResult> se_capacity_sweep(const NetworkConfig& cfg, ClusterMode mode,
                                         const std::vector<double>& caps,
                                         const QuadratureSpec& quad) {
  NetworkConfig c = cfg;
  c.clustering = mode;
  c.validate();
  for (double cap : caps)
    if (!(cap >= 0.0)) throw std::invalid_argument("se_capacity_sweep: caps must be >= 0");
  if (caps.empty()) return {};

  const bool fd = (c.duplex == Duplex::fd);
  const double half = fd ? 1.0 : 0.5;
  AnalyticModel model(c, quad);

  // one direction at every cap, one coverage pass for all finite caps
  auto direction = [&](bool downlink, std::vector<double>* vals, double* err_out) {
    const double share = !fd ? 1.0 : (downlink ? c.fd_split : 1.0 - c.fd_split);
    std::vector<double> eff(caps.size());
    std::vector<double> finite;
    bool any_inf = false;
    for (size_t i = 0; i < caps.size(); ++i) {
      eff[i] = std::isinf(caps[i]) ? caps[i] : caps[i] * share;
      if (std::isinf(eff[i]))
        any_inf = true;
      else
        finite.push_back(eff[i]);
    }
    std::sort(finite.begin(), finite.end());
    finite.erase(std::unique(finite.begin(), finite.end()), finite.end());

    double err = 0.0;
    std::vector<double> grid(finite.size(), 0.0);
    if (!finite.empty()) {
      if (mode == ClusterMode::user_centric) {
        auto cdf = [&](double x) {
          return 1.0 - (downlink ? model.coverage_dl(x, 0.0) : model.coverage_ul(x, 0.0));
        };
        grid = se_cutset_grid(cdf, finite, quad, &err);
      } else {
        // distance-average of the whole grid: d = R sqrt(u), u uniform
        const GaussLegendreRule& rule = gauss_legendre(12);
        for (int i = 0; i < 12; ++i) {
          const double u = 0.5 + 0.5 * rule.nodes[i];
          const double d = model.cluster_radius() * std::sqrt(u);
          auto cdf = [&](double x) {
            return 1.0 - (downlink ? model.coverage_dl(x, d) : model.coverage_ul(x, d));
          };
          double e = 0.0;
          std::vector<double> gd = se_cutset_grid(cdf, finite, quad, &e);
          err += 0.5 * rule.weights[i] * e;
          for (size_t j = 0; j < grid.size(); ++j) grid[j] += 0.5 * rule.weights[i] * gd[j];
        }
      }
    }

    double inf_val = 0.0, inf_err = 0.0;
    if (any_inf) {
      if (mode == ClusterMode::user_centric) {
        inf_val = se_infinite_direction(model, downlink, 0.0, quad, &inf_err);
      } else {
        inf_val = average_over_distance(
            [&](double d) {
              double e = 0.0;
              double v = se_infinite_direction(model, downlink, d, quad, &e);
              inf_err += e;
              return v;
            },
            model.cluster_radius(), 12);
      }
    }

    vals->resize(caps.size());
    for (size_t i = 0; i < caps.size(); ++i) {
      if (std::isinf(eff[i])) {
        (*vals)[i] = inf_val;
      } else {
        const auto it = std::lower_bound(finite.begin(), finite.end(), eff[i]);
        (*vals)[i] = grid[static_cast<size_t>(it - finite.begin())];
      }
    }
    if (err_out) *err_out = err + inf_err;
  };

  std::vector<double> dl, ul;
  double dl_err = 0.0, ul_err = 0.0;
  direction(true, &dl, &dl_err);
  direction(false, &ul, &ul_err);

  std::vector<SeResult> out(caps.size());
  for (size_t i = 0; i < caps.size(); ++i) {
    out[i].dl_se = half * dl[i];
    out[i].ul_se = half * ul[i];
    out[i].dl_error = dl_err;
    out[i].ul_error = ul_err;
    out[i].method = std::isinf(caps[i]) ? SeMethod::analytic_infinite : SeMethod::analytic_cutset;
    out[i].empty_cluster_prob = model.signal_atom();
  }
  return out;
}

SeResult se_disjoint(const NetworkConfig& cfg, const QuadratureSpec& quad) {
  return se_cutset_mode(cfg, quad, ClusterMode::disjoint);
}

SeResult se_user_centric(const NetworkConfig& cfg, const QuadratureSpec& quad) {
  return se_cutset_mode(cfg, quad, ClusterMode::user_centric);
}

// ---------------------------------------------------------------------------
// one-shot wrappers around the model, with a half-order consistency check on
// any MGF that involves a fixed angular or radial rule
// ---------------------------------------------------------------------------

namespace {

MgfValue checked_mgf(const NetworkConfig& cfg,
                     const std::function<cd(const AnalyticModel&)>& eval) {
  QuadratureSpec quad = spec_from_config(cfg);
  AnalyticModel full(cfg, quad);
  AnalyticModel half(cfg, quad, 32, 24);
  cd v = eval(full);
  cd v2 = eval(half);
  return MgfValue{v, std::abs(v - v2)};
}

}  // namespace

MgfValue mgf_x_dl_disjoint(std::complex<double> s, double d, const NetworkConfig& cfg) {
  return checked_mgf(cfg, [&](const AnalyticModel& m) { return m.mgf_x_dl_dj(s, d); });
}
MgfValue mgf_x_ul_disjoint(std::complex<double> s, double d, const NetworkConfig& cfg) {
  return checked_mgf(cfg, [&](const AnalyticModel& m) { return m.mgf_x_ul_dj(s, d); });
}
MgfValue mgf_ici_dl_disjoint(std::complex<double> s, double d, const NetworkConfig& cfg) {
  return checked_mgf(cfg, [&](const AnalyticModel& m) { return m.mgf_ici_dl_dj(s, d); });
}
MgfValue mgf_ici_ul_disjoint(std::complex<double> s, const NetworkConfig& cfg) {
  return checked_mgf(cfg, [&](const AnalyticModel& m) { return m.mgf_ici_ul(s); });
}
MgfValue mgf_cmi_dl(std::complex<double> s, const NetworkConfig& cfg) {
  return checked_mgf(cfg, [&](const AnalyticModel& m) { return m.mgf_cmi_dl(s); });
}
MgfValue mgf_cmi_ul(std::complex<double> s, const NetworkConfig& cfg) {
  return checked_mgf(cfg, [&](const AnalyticModel& m) { return m.mgf_cmi_ul(s); });
}
MgfValue mgf_x_dl_uc(std::complex<double> s, const NetworkConfig& cfg) {
  return checked_mgf(cfg, [&](const AnalyticModel& m) { return m.mgf_x_dl_uc(s); });
}
MgfValue mgf_x_ul_uc(std::complex<double> s, const NetworkConfig& cfg) {
  return checked_mgf(cfg, [&](const AnalyticModel& m) { return m.mgf_x_ul_uc(s); });
}
MgfValue mgf_ici_dl_uc(std::complex<double> s, const NetworkConfig& cfg) {
  return checked_mgf(cfg, [&](const AnalyticModel& m) { return m.mgf_ici_dl_uc(s); });
}
MgfValue mgf_ici_ul_uc(std::complex<double> s, const NetworkConfig& cfg) {
  return checked_mgf(cfg, [&](const AnalyticModel& m) { return m.mgf_ici_ul_uc(s); });
}

}  // namespace fdcran
