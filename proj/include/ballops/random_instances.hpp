#pragma once

#include <memory>
#include <vector>

#include "ball_ops.hpp"
#include "rng.hpp"

namespace ballops {

// One randomized test instance: a polygonal norm plus a finite point set.
// The plane is heap-held so PointSet's borrowed reference stays valid.
struct Instance {
  std::shared_ptr<NormedPlane> plane;
  std::vector<Point> points;

  PointSet set() const { return PointSet(*plane, points); }
};

// Random origin-symmetric polygon with 4..12 vertices: hull of +-v over a few
// random rational seeds, retried until a valid plane appears.
inline NormedPlane random_plane(Rng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const int half = rng.range(2, 6);
    std::vector<Point> seeds;
    for (int i = 0; i < half; ++i) {
      Point v{rng.rational(8, 4), rng.rational(8, 4)};
      if (v == Point{0, 0}) continue;
      seeds.push_back(v);
      seeds.push_back(-v);
    }
    if (seeds.size() < 4) continue;
    const ConvexRegion hull = ConvexRegion::hull_of(seeds);
    if (hull.kind() != RegionKind::Polygon) continue;
    if (hull.vertices().size() < 4 || hull.vertices().size() > 12) continue;
    if (!hull.contains(Point{0, 0}, Containment::Interior)) continue;
    return validate_plane(hull);
  }
  fail(ErrorCode::Internal, "random plane generation stalled");
}

// Regular-ish hexagon/octagon norms used for the non-centrable searches.
inline NormedPlane hexagon_plane() {
  return validate_plane(ConvexRegion::hull_of(
      {{2, 0}, {1, 2}, {-1, 2}, {-2, 0}, {-1, -2}, {1, -2}}));
}

inline NormedPlane octagon_plane() {
  return validate_plane(ConvexRegion::hull_of(
      {{2, 0}, {2, 1}, {1, 2}, {0, 2}, {-1, 2}, {-2, 1}, {-2, 0}, {-2, -1},
       {-1, -2}, {0, -2}, {1, -2}, {2, -1}}));
}

inline std::vector<Point> random_points(Rng& rng, int count) {
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < count) {
    Point p{rng.rational(12, 4), rng.rational(12, 4)};
    bool dup = false;
    for (const Point& q : pts)
      if (p == q) {
        dup = true;
        break;
      }
    if (!dup) pts.push_back(std::move(p));
  }
  return pts;
}

inline Instance random_instance(Rng& rng) {
  Instance inst;
  inst.plane = std::make_shared<NormedPlane>(random_plane(rng));
  inst.points = random_points(rng, rng.range(2, 12));
  return inst;
}

inline std::vector<Instance> instance_corpus(uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<Instance> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(random_instance(rng));
  return out;
}

}  // namespace ballops
