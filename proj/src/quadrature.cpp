#include "fdcran/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fdcran {

namespace {

// Gauss-Kronrod 15(7) abscissae and weights on [-1, 1], positive half.
// Odd indices are the embedded 7-point Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,  //
    0.949107912342758524526189684047851,  //
    0.864864423359769072789712788640926,  //
    0.741531185599394439863864773280788,  //
    0.586087235467691130294144838258730,  //
    0.405845151377397166906606412076961,  //
    0.207784955007898467600689403773245,  //
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,  //
    0.063092092629978553290700663189204,  //
    0.104790010322250183839876322541518,  //
    0.140653259715525918745189590510238,  //
    0.169004726639267902826583426598550,  //
    0.190350578064785409913256402421014,  //
    0.204432940075298892414161999234649,  //
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,  //
    0.279705391489276667901467771423780,  //
    0.381830050505118944950369775488975,  //
    0.417959183673469387755102040816327};

template <typename T>
double vabs(const T& v) {
  return std::abs(v);
}

template <typename T>
struct Segment {
  double a, b;
  T value;
  double error;
};

template <typename T>
void gk15(const std::function<T(double)>& f, double a, double b, T& value, double& error,
          bool& finite) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  T fc = f(c);
  T kronrod = kWgk[7] * fc;
  T gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    T lo = f(c - h * kXgk[i]);
    T hi = f(c + h * kXgk[i]);
    kronrod += kWgk[i] * (lo + hi);
    if (i % 2 == 1) gauss += kWg[i / 2] * (lo + hi);
  }
  value = h * kronrod;
  error = std::abs(h) * vabs(kronrod - gauss);
  finite = std::isfinite(vabs(value)) && std::isfinite(error);
}

template <typename T>
void adaptive(const std::function<T(double)>& f, double a, double b, const QuadratureSpec& spec,
              T& value, double& error, int& evaluations, bool& converged) {
  if (!(spec.rel_tol > 0.0) || !(spec.abs_tol > 0.0))
    throw std::invalid_argument("quadrature: tolerances must be positive");
  value = T{};
  error = 0.0;
  evaluations = 0;
  converged = false;
  if (a == b) {
    converged = true;
    return;
  }

  std::vector<Segment<T>> segs;
  segs.reserve(64);
  Segment<T> s0{a, b, T{}, 0.0};
  bool finite = true;
  gk15(f, a, b, s0.value, s0.error, finite);
  evaluations += 15;
  if (!finite) return;
  segs.push_back(s0);

  T total = s0.value;
  double total_err = s0.error;
  while (static_cast<int>(segs.size()) < std::max(1, spec.max_subdivisions)) {
    double tol = std::max(spec.abs_tol, spec.rel_tol * vabs(total));
    if (total_err <= tol) {
      converged = true;
      break;
    }
    size_t worst = 0;
    for (size_t i = 1; i < segs.size(); ++i)
      if (segs[i].error > segs[worst].error) worst = i;
    Segment<T> seg = segs[worst];
    double mid = 0.5 * (seg.a + seg.b);
    if (mid <= seg.a || mid >= seg.b) break;  // interval exhausted at double precision
    Segment<T> left{seg.a, mid, T{}, 0.0};
    Segment<T> right{mid, seg.b, T{}, 0.0};
    gk15(f, left.a, left.b, left.value, left.error, finite);
    if (!finite) return;
    gk15(f, right.a, right.b, right.value, right.error, finite);
    if (!finite) return;
    evaluations += 30;
    segs[worst] = left;
    segs.push_back(right);
    total = T{};
    total_err = 0.0;
    for (const auto& s : segs) {
      total += s.value;
      total_err += s.error;
    }
  }
  if (!converged && total_err <= std::max(spec.abs_tol, spec.rel_tol * vabs(total)))
    converged = true;
  value = total;
  error = total_err;
}

GaussLegendreRule build_gauss_legendre(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi-style initial guess, then Newton on the three-term recurrence.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        // one polishing pass so weights see the converged node
        double q0 = 1.0, q1 = x;
        for (int k = 2; k <= n; ++k) {
          double qk = ((2.0 * k - 1.0) * x * q1 - (k - 1.0) * q0) / k;
          q0 = q1;
          q1 = qk;
        }
        dp = n * (x * q1 - q0) / (x * x - 1.0);
        break;
      }
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

QuadResult integrate(const std::function<std::complex<double>(double)>& f, double a, double b,
                     const QuadratureSpec& spec) {
  QuadResult r;
  adaptive<std::complex<double>>(f, a, b, spec, r.value, r.error, r.evaluations, r.converged);
  return r;
}

RealQuadResult integrate_real(const std::function<double(double)>& f, double a, double b,
                              const QuadratureSpec& spec) {
  RealQuadResult r;
  adaptive<double>(f, a, b, spec, r.value, r.error, r.evaluations, r.converged);
  return r;
}

const GaussLegendreRule& gauss_legendre(int order) {
  if (order < 1 || order > 512) throw std::invalid_argument("gauss_legendre: bad order");
  static std::map<int, GaussLegendreRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_gauss_legendre(order)).first;
  return it->second;
}

std::complex<double> gl_integrate(const std::function<std::complex<double>(double)>& f, double a,
                                  double b, int order) {
  const GaussLegendreRule& rule = gauss_legendre(order);
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  std::complex<double> acc{0.0, 0.0};
  for (int i = 0; i < order; ++i) acc += rule.weights[i] * f(c + h * rule.nodes[i]);
  return h * acc;
}

double gl_integrate_real(const std::function<double(double)>& f, double a, double b, int order) {
  const GaussLegendreRule& rule = gauss_legendre(order);
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < order; ++i) acc += rule.weights[i] * f(c + h * rule.nodes[i]);
  return h * acc;
}

}  // namespace fdcran
