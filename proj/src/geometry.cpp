#include "fdcran/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace fdcran {

double dist(const Vec2& a, const Vec2& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

PointPattern sample_ppp(double density, const Region& region, SplitRng& rng) {
  if (density < 0.0) throw std::invalid_argument("sample_ppp: density must be >= 0");
  if (region.radius <= 0.0) throw std::invalid_argument("sample_ppp: region radius must be > 0");
  PointPattern pat;
  pat.density = density;
  pat.region = region;
  const double mean = density * M_PI * region.radius * region.radius;
  const uint64_t n = rng.next_poisson(mean);
  pat.points.reserve(n);
  for (uint64_t i = 0; i < n; ++i) {
    const double r = region.radius * std::sqrt(rng.next_double());
    const double phi = 2.0 * M_PI * rng.next_double();
    pat.points.push_back({region.center.x + r * std::cos(phi),
                          region.center.y + r * std::sin(phi)});
  }
  return pat;
}

PointPattern sample_ppp(double density, const Region& region, uint64_t rng_seed) {
  SplitRng rng(rng_seed);
  return sample_ppp(density, region, rng);
}

double xi(double y, double theta, double R) {
  if (y < 0.0 || y > R) throw std::invalid_argument("xi: need 0 <= y <= R");
  const double c = y * std::cos(theta);
  const double under = R * R - c * c;
  // under >= 0 holds for y <= R; clamp tiny negative round-off
  return std::sqrt(under > 0.0 ? under : 0.0) + y * std::sin(theta);
}

double sample_disjoint_user_distance(double R, SplitRng& rng) {
  if (R <= 0.0) throw std::invalid_argument("sample_disjoint_user_distance: R must be > 0");
  return R * std::sqrt(rng.next_double());
}

std::vector<Vec2> points_in_disk(const PointPattern& pattern, const Vec2& center, double radius) {
  std::vector<Vec2> out;
  for (const auto& p : pattern.points)
    if (dist(p, center) <= radius) out.push_back(p);
  return out;
}

std::vector<Vec2> points_outside_disk(const PointPattern& pattern, const Vec2& center,
                                      double radius) {
  std::vector<Vec2> out;
  for (const auto& p : pattern.points)
    if (dist(p, center) > radius) out.push_back(p);
  return out;
}

ClusterSelection build_cluster(const PointPattern& rus, const Vec2& center,
                               double cluster_radius) {
  ClusterSelection sel;
  sel.ru_positions = points_in_disk(rus, center, cluster_radius);
  sel.empty = sel.ru_positions.empty();
  return sel;
}

}  // namespace fdcran
