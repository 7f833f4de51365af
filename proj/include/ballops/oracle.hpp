#pragma once

#include <vector>

#include "ball_ops.hpp"

namespace ballops {

// Rational lattice over a box covering K expanded by twice its diameter in
// gauge terms. Everything stays rational so oracle comparisons are exact.
struct Grid {
  Point lo, hi;
  Rational h;
};

inline Grid make_grid(const NormedPlane& plane, const PointSet& K, const Rational& h) {
  check_internal(h > Rational::zero(), "grid step must be positive");
  const auto& pts = K.points();
  Point lo = pts[0], hi = pts[0];
  for (const Point& p : pts) {
    lo = {min(lo.x, p.x), min(lo.y, p.y)};
    hi = {max(hi.x, p.x), max(hi.y, p.y)};
  }
  Rational sx = 0, sy = 0;  // coordinate extents of the unit ball
  for (const Point& v : plane.unit_ball.vertices()) {
    sx = max(sx, abs(v.x));
    sy = max(sy, abs(v.y));
  }
  const Rational D = diameter(K).first;
  const Rational two(2);
  const Point pad{two * D * sx, two * D * sy};
  return {lo - pad, hi + pad, h};
}

namespace detail {

inline long grid_steps(const Rational& span, const Rational& h) {
  check_internal(span >= Rational::zero(), "negative grid span");
  const Rational q = span / h;
  mpz_class n = q.num() / q.den();  // floor, both non-negative
  check_internal(n.fits_slong_p(), "grid too fine");
  return n.get_si();
}

template <typename Fn>
inline void for_each_grid_point(const Grid& g, Fn&& fn) {
  const long nx = grid_steps(g.hi.x - g.lo.x, g.h);
  const long ny = grid_steps(g.hi.y - g.lo.y, g.h);
  check_internal((nx + 1) * (ny + 1) <= 16'000'000L, "grid too large");
  for (long i = 0; i <= nx; ++i) {
    const Rational x = g.lo.x + Rational(static_cast<int>(i)) * g.h;
    for (long j = 0; j <= ny; ++j) fn(Point{x, g.lo.y + Rational(static_cast<int>(j)) * g.h});
  }
}

}  // namespace detail

// min over lattice points x of max_i gauge(p_i - x); within the Lipschitz
// bound of lambda_K because some lattice point lies within one step of a
// Chebyshev center and the gauge is 1-Lipschitz in its own metric.
inline Rational oracle_minimax(const NormedPlane& plane, const PointSet& K, const Grid& grid) {
  bool first = true;
  Rational best;
  detail::for_each_grid_point(grid, [&](const Point& x) {
    Rational worst = 0;
    for (const Point& p : K.points()) worst = max(worst, gauge(plane, p - x));
    if (first || worst < best) {
      best = worst;
      first = false;
    }
  });
  check_internal(!first, "empty grid");
  return best;
}

// Conversion factor: a lattice point within one step per coordinate is within
// h*(gauge(e1)+gauge(e2)) in the gauge.
inline Rational minimax_grid_bound(const NormedPlane& plane, const Rational& h) {
  return h * (gauge(plane, {1, 0}) + gauge(plane, {0, 1}));
}

// Exact membership in bi(K, lambda): finitely many constraints.
inline bool oracle_member_bi(const NormedPlane& plane, const PointSet& K, const Rational& lambda,
                             const Point& g) {
  for (const Point& p : K.points())
    if (gauge(plane, g - p) > lambda) return false;
  return true;
}

// One-sided falsifier for bh membership: scans lattice centers whose ball
// contains K; a violated center certifies g outside bh, agreement only
// certifies up to the grid resolution.
inline bool oracle_member_bh(const NormedPlane& plane, const PointSet& K, const Rational& lambda,
                             const Point& g, const Grid& grid) {
  bool inside = true;
  detail::for_each_grid_point(grid, [&](const Point& x) {
    if (!inside) return;
    for (const Point& p : K.points())
      if (gauge(plane, p - x) > lambda) return;  // ball does not contain K
    if (gauge(plane, g - x) > lambda) inside = false;
  });
  return inside;
}

// Constraint-oracle route for ball intersections: one shot through the raw
// half-plane intersection of every facet of every ball, independent of the
// incremental clipping used by ball_intersection.
inline ConvexRegion oracle_ball_intersection(const NormedPlane& plane,
                                             const std::vector<Point>& centers,
                                             const Rational& lambda) {
  check_internal(!centers.empty(), "oracle bi with no centers");
  if (lambda.is_zero()) {
    for (const Point& c : centers)
      if (c != centers[0]) return ConvexRegion::empty();
    return ConvexRegion::single(centers[0]);
  }
  std::vector<HalfPlane> planes;
  for (const Point& c : centers)
    for (const HalfPlane& f : ball_facets(plane, c, lambda)) planes.push_back(f);
  return halfplane_intersection(planes);
}

// Definition-side route for the ball hull: centers of enclosing balls are
// bi(K, lambda); intersect the balls at its vertices, all via the constraint
// oracle.
inline ConvexRegion oracle_ball_hull(const NormedPlane& plane, const PointSet& K,
                                     const Rational& lambda) {
  const ConvexRegion centers = oracle_ball_intersection(plane, K.points(), lambda);
  check_internal(!centers.is_empty(), "oracle bh with empty center set");
  return oracle_ball_intersection(plane, centers.vertices(), lambda);
}

}  // namespace ballops
