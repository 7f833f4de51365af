#pragma once

#include <utility>
#include <vector>

#include "lp.hpp"

namespace ballops {

// A finite point set in a normed plane. Points are deduplicated, first
// occurrence kept; the plane is borrowed and must outlive the set.
struct PointSet {
  PointSet(const NormedPlane& plane, std::vector<Point> pts) : plane_(&plane) {
    for (Point& p : pts) {
      bool dup = false;
      for (const Point& q : points_)
        if (p == q) {
          dup = true;
          break;
        }
      if (!dup) points_.push_back(std::move(p));
    }
    require(!points_.empty(), ErrorCode::EmptyInput, "point set must be non-empty");
  }

  const NormedPlane& plane() const { return *plane_; }
  const std::vector<Point>& points() const { return points_; }
  size_t size() const { return points_.size(); }

private:
  const NormedPlane* plane_;
  std::vector<Point> points_;
};

// Region produced by a ball operator together with the radius used and the
// centers whose spheres actually touch it.
struct BallOpResult {
  ConvexRegion region;
  Rational lambda_used;
  std::vector<Point> supporting_centers;
};

inline std::pair<Rational, std::pair<Point, Point>> diameter(const PointSet& K) {
  const auto& pts = K.points();
  Rational best = 0;
  std::pair<Point, Point> pair{pts[0], pts[0]};
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      Rational d = gauge(K.plane(), pts[i] - pts[j]);
      if (d > best) {
        best = std::move(d);
        pair = {pts[i], pts[j]};
      }
    }
  return {std::move(best), std::move(pair)};
}

namespace detail {

// Intersection of the balls of radius lambda at the given centers, as a fold
// of pairwise region clips.
inline ConvexRegion intersect_ball_regions(const NormedPlane& plane,
                                           const std::vector<Point>& centers,
                                           const Rational& lambda) {
  ConvexRegion acc = ball(plane, centers[0], lambda).region;
  for (size_t i = 1; i < centers.size() && !acc.is_empty(); ++i)
    acc = intersect_regions(acc, ball(plane, centers[i], lambda).region);
  return acc;
}

// Centers whose sphere meets the region: max over the region of the gauge
// distance to the center equals lambda (attained at a vertex by convexity).
inline std::vector<Point> active_centers(const NormedPlane& plane,
                                         const std::vector<Point>& centers,
                                         const Rational& lambda, const ConvexRegion& region) {
  std::vector<Point> out;
  if (region.is_empty()) return out;
  for (const Point& c : centers) {
    Rational worst = 0;
    for (const Point& v : region.vertices()) worst = max(worst, gauge(plane, v - c));
    if (worst == lambda) out.push_back(c);
  }
  return out;
}

}  // namespace detail

// bi(K, lambda): intersection of all radius-lambda balls centered in K.
// Emptiness is a value, not an error.
inline BallOpResult ball_intersection(const PointSet& K, const Rational& lambda) {
  require(lambda >= Rational::zero(), ErrorCode::NegativeRadius, "bi needs lambda >= 0");
  ConvexRegion region = detail::intersect_ball_regions(K.plane(), K.points(), lambda);
  auto support = detail::active_centers(K.plane(), K.points(), lambda, region);
  return {std::move(region), lambda, std::move(support)};
}

// bh(K, lambda): intersection of all radius-lambda balls containing K.
// A center x works iff x lies in bi(K, lambda), and the gauge distance to a
// convex set of centers is maximized at its vertices, so intersecting over
// the vertices of bi(K, lambda) is exact.
inline BallOpResult ball_hull(const PointSet& K, const Rational& lambda) {
  const auto [lambda_K, witness] = chebyshev_radius(K.plane(), K.points());
  require(lambda >= lambda_K, ErrorCode::RadiusTooSmall,
          "ball hull needs lambda >= lambda_K = " + lambda_K.str());
  ConvexRegion centers = detail::intersect_ball_regions(K.plane(), K.points(), lambda);
  check_internal(!centers.is_empty(), "bi(K, lambda) empty although lambda >= lambda_K");
  ConvexRegion region = detail::intersect_ball_regions(K.plane(), centers.vertices(), lambda);
  auto support = detail::active_centers(K.plane(), centers.vertices(), lambda, region);
  return {std::move(region), lambda, std::move(support)};
}

// Ch(K) = bi(K, lambda_K): every center of a minimal enclosing ball.
inline std::pair<Rational, ConvexRegion> chebyshev_set(const PointSet& K) {
  const auto [lambda_K, witness] = chebyshev_radius(K.plane(), K.points());
  ConvexRegion region = detail::intersect_ball_regions(K.plane(), K.points(), lambda_K);
  check_internal(region.contains(witness, Containment::Closed),
                 "Chebyshev witness outside bi(K, lambda_K)");
  return {lambda_K, std::move(region)};
}

inline bool is_centrable(const PointSet& K) {
  const auto [lambda_K, witness] = chebyshev_radius(K.plane(), K.points());
  return diameter(K).first == lambda_K + lambda_K;
}

}  // namespace ballops
