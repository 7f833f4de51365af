#pragma once

#include <utility>
#include <vector>

#include "geometry.hpp"

namespace ballops {

// A normed plane defined by a polygonal unit ball: origin-symmetric convex
// polygon with the origin interior. Facets are the outward edge half-planes;
// they reproduce the ball exactly.
struct NormedPlane {
  ConvexRegion unit_ball;
  std::vector<HalfPlane> facets;

  size_t vertex_count() const { return unit_ball.vertices().size(); }
};

inline NormedPlane validate_plane(const ConvexRegion& polygon) {
  require(polygon.kind() == RegionKind::Polygon, ErrorCode::NotAPolygon,
          "unit ball must be a polygon, got " + std::string(region_kind_name(polygon.kind())));
  const Point origin{0, 0};
  require(polygon.contains(origin, Containment::Interior), ErrorCode::OriginNotInterior,
          "unit ball must contain the origin in its interior");
  std::vector<Point> negated;
  negated.reserve(polygon.vertices().size());
  for (const Point& v : polygon.vertices()) negated.push_back(-v);
  require(ConvexRegion::hull_of(negated) == polygon, ErrorCode::NotSymmetric,
          "unit ball must be origin-symmetric");
  NormedPlane plane{polygon, polygon.facets()};
  check_internal(halfplane_intersection(plane.facets) == polygon,
                 "facets do not reproduce the unit ball");
  return plane;
}

// Minkowski functional of v: min{lambda >= 0 : v in lambda*B}. For a polytope
// with the origin interior this is max_j n_j·v / h_j over the facets, and the
// maximizing facet is the one the ray from the origin through v crosses.
inline Rational gauge(const NormedPlane& plane, const Point& v) {
  Rational best = 0;
  for (const HalfPlane& f : plane.facets) {
    const Rational value = f.eval(v) / f.c;  // h_j > 0 since the origin is interior
    if (value > best) best = value;
  }
  return best;
}

struct Ball {
  Point center;
  Rational radius;        // >= 0; radius 0 is the point region {center}
  ConvexRegion region;    // center + radius * unit ball
};

inline Ball ball(const NormedPlane& plane, const Point& x, const Rational& lambda) {
  require(lambda >= Rational::zero(), ErrorCode::NegativeRadius,
          "ball radius must be non-negative");
  if (lambda.is_zero()) return {x, lambda, ConvexRegion::single(x)};
  std::vector<Point> verts;
  verts.reserve(plane.vertex_count());
  for (const Point& v : plane.unit_ball.vertices()) verts.push_back(x + lambda * v);
  return {x, lambda, ConvexRegion::hull_of(std::move(verts))};
}

// Facet half-planes of B(x, lambda): n_j·(z - x) <= lambda*h_j.
inline std::vector<HalfPlane> ball_facets(const NormedPlane& plane, const Point& x,
                                          const Rational& lambda) {
  std::vector<HalfPlane> out;
  out.reserve(plane.facets.size());
  for (const HalfPlane& f : plane.facets)
    out.emplace_back(f.nx, f.ny, lambda * f.c + f.eval(x));
  return out;
}

inline bool on_sphere(const NormedPlane& plane, const Ball& b, const Point& p) {
  return gauge(plane, p - b.center) == b.radius;
}

enum class Orientation { Positive, Negative };  // counter-clockwise / clockwise

namespace detail {

// Position of a boundary point as (edge index, parameter in [0,1)) with
// vertices canonicalized to the start of their outgoing CCW edge.
struct BoundaryPos {
  size_t edge;
  Rational t;
};

inline std::optional<BoundaryPos> locate_on_boundary(const ConvexRegion& poly, const Point& p) {
  const auto& vs = poly.vertices();
  for (size_t i = 0; i < vs.size(); ++i) {
    const Point& a = vs[i];
    const Point& b = vs[(i + 1) % vs.size()];
    if (!ConvexRegion::on_segment(a, b, p)) continue;
    if (p == b) return BoundaryPos{(i + 1) % vs.size(), Rational(0)};
    const Point d = b - a;
    const Rational t = d.x.is_zero() ? (p.y - a.y) / d.y : (p.x - a.x) / d.x;
    return BoundaryPos{i, t};
  }
  return std::nullopt;
}

}  // namespace detail

// Boundary polyline from one sphere point to another in the given
// orientation, inclusive of the endpoints and of every polygon vertex
// strictly between them.
inline std::vector<Point> sphere_path(const NormedPlane& plane, const Ball& b, const Point& from,
                                      const Point& to, Orientation orient) {
  require(b.radius > Rational::zero(), ErrorCode::PointNotOnSphere,
          "sphere of a radius-0 ball is a point");
  require(on_sphere(plane, b, from), ErrorCode::PointNotOnSphere, "path start not on sphere");
  require(on_sphere(plane, b, to), ErrorCode::PointNotOnSphere, "path end not on sphere");
  if (from == to) return {from};

  const auto& vs = b.region.vertices();
  const size_t n = vs.size();
  auto pos_from = detail::locate_on_boundary(b.region, from);
  auto pos_to = detail::locate_on_boundary(b.region, to);
  check_internal(pos_from && pos_to, "sphere point not located on boundary polygon");

  std::vector<Point> path{from};
  if (orient == Orientation::Positive) {
    size_t edge = pos_from->edge;
    Rational t = pos_from->t;
    while (!(edge == pos_to->edge && t <= pos_to->t)) {
      const Point& corner = vs[(edge + 1) % n];
      edge = (edge + 1) % n;
      t = 0;
      if (edge == pos_to->edge && pos_to->t.is_zero()) break;  // `to` is this corner
      path.push_back(corner);
      check_internal(path.size() <= n + 2, "sphere path did not close");
    }
  } else {
    size_t edge = pos_from->edge;
    Rational t = pos_from->t;
    while (!(edge == pos_to->edge && pos_to->t <= t)) {
      // step clockwise: to the start vertex of the current edge
      if (t.is_zero()) {
        edge = (edge + n - 1) % n;
        t = 1;
        continue;
      }
      const Point& corner = vs[edge];
      t = 0;
      if (edge == pos_to->edge && pos_to->t.is_zero()) break;
      path.push_back(corner);
      check_internal(path.size() <= n + 2, "sphere path did not close");
    }
  }
  path.push_back(to);
  return path;
}

// For polygonal balls the extreme points of B(x, lambda) are exactly the
// scaled unit-ball vertices.
inline bool is_extreme_point_of_ball(const NormedPlane& plane, const Ball& b, const Point& p) {
  require(b.radius > Rational::zero() && on_sphere(plane, b, p), ErrorCode::PointNotOnSphere,
          "point not on the sphere");
  const Point dir = p - b.center;
  for (const Point& v : plane.unit_ball.vertices())
    if (b.radius * v == dir) return true;
  return false;
}

}  // namespace ballops
