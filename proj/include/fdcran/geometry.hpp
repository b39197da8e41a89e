#pragma once

#include <vector>

#include "fdcran/rng.hpp"

namespace fdcran {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

// circular deployment region, km units throughout
struct Region {
  Vec2 center{};
  double radius = 0.0;
};

enum class ClusterMode { disjoint, user_centric };

struct ClusterGeometry {
  ClusterMode mode = ClusterMode::user_centric;
  double cluster_radius = 0.0;    // R
  double ref_user_distance = 0.0; // d, distance of the reference user from the cluster center
  double exclusion_radius = 0.0;  // E, MI cancellation disk around the reference DL user
};

struct PointPattern {
  std::vector<Vec2> points;
  double density = 0.0;
  Region region{};
};

double dist(const Vec2& a, const Vec2& b);

// homogeneous PPP on a disk: Poisson count, uniform placement
PointPattern sample_ppp(double density, const Region& region, SplitRng& rng);
PointPattern sample_ppp(double density, const Region& region, uint64_t rng_seed);

// distance from a point at offset y from the disk center to the disk edge
// along direction theta: xi = sqrt(R^2 - y^2 cos^2 theta) + y sin theta
double xi(double y, double theta, double R);

// distance of the reference user from the cluster center in disjoint mode,
// density 2d/R^2 on [0,R]
double sample_disjoint_user_distance(double R, SplitRng& rng);

std::vector<Vec2> points_in_disk(const PointPattern& pattern, const Vec2& center, double radius);
std::vector<Vec2> points_outside_disk(const PointPattern& pattern, const Vec2& center, double radius);

// serving RU set for one cluster; empty selections are flagged so the
// caller can resample the trial
struct ClusterSelection {
  std::vector<Vec2> ru_positions;
  bool empty = true;
};
ClusterSelection build_cluster(const PointPattern& rus, const Vec2& center, double cluster_radius);

}  // namespace fdcran
