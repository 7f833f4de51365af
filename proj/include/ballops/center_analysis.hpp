#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ball_ops.hpp"

namespace ballops {

struct CriticalReport {
  Point center;
  Rational radius;
  std::vector<Point> critical_points;
  std::optional<int> degree;                       // 2 or 3 when meanstream
  std::optional<std::vector<Point>> base_system;   // size == degree
};

// Points of K lying exactly on the sphere of the minimal enclosing ball
// centered at x. x must be a Chebyshev center.
inline CriticalReport critical_set(const PointSet& K, const Point& x) {
  const auto [lambda_K, witness] = chebyshev_radius(K.plane(), K.points());
  Rational worst = 0;
  for (const Point& p : K.points()) worst = max(worst, gauge(K.plane(), p - x));
  require(worst == lambda_K, ErrorCode::NotAChebyshevCenter,
          "max distance " + worst.str() + " != lambda_K " + lambda_K.str());
  CriticalReport report{x, lambda_K, {}, std::nullopt, std::nullopt};
  for (const Point& p : K.points())
    if (gauge(K.plane(), p - x) == lambda_K) report.critical_points.push_back(p);
  check_internal(!report.critical_points.empty(), "Chebyshev center with no critical points");
  return report;
}

// Smallest base system at x: first a pair with x in the open segment, then a
// non-degenerate triple with x interior. Subsets are scanned in lexicographic
// index order, so the first hit is deterministic.
inline CriticalReport base_system(const PointSet& K, const Point& x) {
  CriticalReport report = critical_set(K, x);
  const auto& cr = report.critical_points;
  for (size_t i = 0; i < cr.size(); ++i)
    for (size_t j = i + 1; j < cr.size(); ++j) {
      if (cr[i] == cr[j]) continue;
      if (ConvexRegion::segment(cr[i], cr[j]).relint_contains(x)) {
        report.degree = 2;
        report.base_system = std::vector<Point>{cr[i], cr[j]};
        return report;
      }
    }
  for (size_t i = 0; i < cr.size(); ++i)
    for (size_t j = i + 1; j < cr.size(); ++j)
      for (size_t k = j + 1; k < cr.size(); ++k) {
        if (cross(cr[i], cr[j], cr[k]).sign() == 0) continue;  // need a 2-simplex
        if (ConvexRegion::hull_of({cr[i], cr[j], cr[k]}).relint_contains(x)) {
          report.degree = 3;
          report.base_system = std::vector<Point>{cr[i], cr[j], cr[k]};
          return report;
        }
      }
  return report;  // no base system: x is not meanstream under vertex critical points
}

// For centrable K: Ch(K) is a singleton iff some diametrical chord midpoint
// sees its endpoints as extreme points of the minimal ball. When the extreme
// condition holds the chord's Chebyshev set is that midpoint alone and it
// absorbs Ch(K).
inline std::pair<bool, std::optional<CriticalReport>> ch_singleton_centrable(const PointSet& K) {
  require(is_centrable(K), ErrorCode::NotCentrable, "set is not centrable");
  const auto [D, chord] = diameter(K);
  const Rational lambda_K = Rational(1, 2) * D;
  const auto& pts = K.points();
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      if (gauge(K.plane(), pts[i] - pts[j]) != D) continue;
      const Point m = midpoint(pts[i], pts[j]);
      const Ball b = ball(K.plane(), m, lambda_K);
      if (!is_extreme_point_of_ball(K.plane(), b, pts[i])) continue;
      CriticalReport report = critical_set(K, m);
      report.degree = 2;
      report.base_system = std::vector<Point>{pts[i], pts[j]};
      return {true, std::move(report)};
    }
  return {false, std::nullopt};
}

// Inner illumination of a convex polygon by boundary points P: every boundary
// point must see some p in P through the interior. It suffices to test the
// vertices and one relative-interior representative per edge, with the exact
// segment-midpoint criterion: a segment between two points of a convex body
// whose midpoint is not interior lies entirely in a face.
inline bool inner_illuminating(const std::vector<Point>& P, const ConvexRegion& C) {
  check_internal(C.kind() == RegionKind::Polygon, "inner illumination needs a polygon");
  for (const Point& p : P)
    require(C.contains(p, Containment::Closed) && !C.contains(p, Containment::Interior),
            ErrorCode::PointNotOnBoundary, "illuminating point not on the boundary");
  std::vector<Point> probes = C.vertices();
  const auto& vs = C.vertices();
  for (size_t i = 0; i < vs.size(); ++i) probes.push_back(midpoint(vs[i], vs[(i + 1) % vs.size()]));
  for (const Point& x : probes) {
    bool lit = false;
    for (const Point& p : P)
      if (C.contains(midpoint(p, x), Containment::Interior)) {
        lit = true;
        break;
      }
    if (!lit) return false;
  }
  return true;
}

// A set of sphere points is global when no closed half-plane through the
// center contains it, i.e. the directions to the points positively span the
// plane. A blocking normal, when one exists, can be chosen among the
// directions' perpendiculars and negations.
inline bool is_global(const std::vector<Point>& P, const Ball& C) {
  std::vector<Point> dirs;
  dirs.reserve(P.size());
  for (const Point& p : P) {
    require(C.region.contains(p, Containment::Closed) &&
                !C.region.contains(p, Containment::Interior),
            ErrorCode::PointNotOnBoundary, "point not on the sphere");
    dirs.push_back(p - C.center);
  }
  std::vector<Point> candidates;
  for (const Point& v : dirs) {
    candidates.push_back(perp(v));
    candidates.push_back(-perp(v));
    candidates.push_back(-v);
  }
  for (const Point& n : candidates) {
    if (n == Point{0, 0}) continue;
    bool blocking = true;
    for (const Point& v : dirs)
      if (dot(n, v).sign() > 0) {
        blocking = false;
        break;
      }
    if (blocking) return false;
  }
  return true;
}

// Illumination restricted to the relative interiors of the facets: every
// open edge must see some p through the interior. For a boundary point in an
// open edge E this is decided by whether some p lies outside the closed edge,
// so one midpoint probe per edge is exact. This is the form the base-system
// illumination argument actually establishes for polytopal balls; the
// full-boundary version can fail at ball corners whose two edges each carry
// a base point.
inline bool facet_interiors_illuminated(const std::vector<Point>& P, const ConvexRegion& C) {
  check_internal(C.kind() == RegionKind::Polygon, "illumination needs a polygon");
  for (const Point& p : P)
    require(C.contains(p, Containment::Closed) && !C.contains(p, Containment::Interior),
            ErrorCode::PointNotOnBoundary, "illuminating point not on the boundary");
  const auto& vs = C.vertices();
  for (size_t i = 0; i < vs.size(); ++i) {
    const Point probe = midpoint(vs[i], vs[(i + 1) % vs.size()]);
    bool lit = false;
    for (const Point& p : P)
      if (C.contains(midpoint(p, probe), Containment::Interior)) {
        lit = true;
        break;
      }
    if (!lit) return false;
  }
  return true;
}

// The base system illuminates the facet interiors of the minimal enclosing
// ball; a degree-3 system additionally forces the critical set to be global
// on it.
inline bool verify_base_illuminates(const PointSet& K, const CriticalReport& report) {
  check_internal(report.base_system.has_value(), "report carries no base system");
  const Ball b = ball(K.plane(), report.center, report.radius);
  bool ok = facet_interiors_illuminated(*report.base_system, b.region);
  if (report.degree && *report.degree == 3) ok = ok && is_global(report.critical_points, b);
  return ok;
}

}  // namespace ballops
