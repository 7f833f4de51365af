#pragma once

#include <set>
#include <utility>
#include <vector>

#include "ball_ops.hpp"

namespace ballops {

// A minimal circular arc: the piece of S(center, radius) between its two
// endpoints lying in the half-plane of line <a,b> away from the center.
struct Arc {
  Point a, b;
  Point center;
  Rational radius;
  std::vector<Point> polyline;  // on the sphere, endpoints included
  HalfPlane side;               // closed half-plane containing the arc
};

namespace detail {

inline HalfPlane arc_side(const Point& a, const Point& b, const Point& center) {
  Point n = perp(b - a);
  int s = cross(a, b, center).sign();
  if (s > 0) n = -n;  // flip so the center is on the <= side boundary complement
  // side = {z : cross(a,b,z)*sign <= 0} rewritten as n·z >= n·a, i.e. (-n)·z <= (-n)·a
  return HalfPlane(-n.x, -n.y, dot(-n, a));
}

inline bool all_on_line(const std::vector<Point>& pts, const Point& a, const Point& b) {
  for (const Point& p : pts)
    if (cross(a, b, p).sign() != 0) return false;
  return true;
}

inline Arc arc_for_center(const NormedPlane& plane, const Point& p, const Point& q,
                          const Rational& lambda, const Point& center) {
  const Ball sphere = ball(plane, center, lambda);
  std::vector<Point> polyline;
  const int s = cross(p, q, center).sign();
  if (s == 0) {
    polyline = {p, q};
  } else {
    auto far_side = [&](const std::vector<Point>& path) {
      for (const Point& v : path)
        if (cross(p, q, v).sign() * s > 0) return false;
      return true;
    };
    std::vector<Point> pos = sphere_path(plane, sphere, p, q, Orientation::Positive);
    if (far_side(pos)) {
      polyline = std::move(pos);
    } else {
      std::vector<Point> neg = sphere_path(plane, sphere, p, q, Orientation::Negative);
      check_internal(far_side(neg), "no far-side sphere path between arc endpoints");
      polyline = std::move(neg);
    }
    if (all_on_line(polyline, p, q)) polyline = {p, q};  // degenerate arc = the chord
  }
  return Arc{p, q, center, lambda, std::move(polyline), arc_side(p, q, center)};
}

inline std::vector<Point> sorted_points(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace detail

// The one or two minimal circular arcs of radius lambda meeting p and q.
// Arc centers are the components of S(p,lambda) ∩ S(q,lambda); a segment
// component is represented by its midpoint. Arcs coinciding as point sets
// collapse to one entry.
inline std::vector<Arc> minimal_arcs(const NormedPlane& plane, const Point& p, const Point& q,
                                     const Rational& lambda) {
  require(p != q, ErrorCode::CoincidentPoints, "minimal arcs need distinct points");
  const Rational d = gauge(plane, p - q);
  require(d <= lambda, ErrorCode::PointsTooFar,
          "minimal arcs need gauge(p-q) <= lambda, got " + d.str() + " > " + lambda.str());

  const Ball bp = ball(plane, p, lambda);
  const Ball bq = ball(plane, q, lambda);
  auto components = boundary_components(bp.region, bq.region);
  check_internal(!components.empty() && components.size() <= 2,
                 "sphere pair with no or too many boundary components");

  std::vector<Arc> arcs;
  for (const auto& [lo, hi] : components)
    arcs.push_back(detail::arc_for_center(plane, p, q, lambda, midpoint(lo, hi)));
  std::sort(arcs.begin(), arcs.end(),
            [](const Arc& x, const Arc& y) { return lex_less(x.center, y.center); });
  if (arcs.size() == 2 &&
      detail::sorted_points(arcs[0].polyline) == detail::sorted_points(arcs[1].polyline))
    arcs.pop_back();
  return arcs;
}

struct ArcHullResult {
  ConvexRegion region;
  std::vector<Arc> arcs;
};

namespace detail {

inline Point scale_point(const Point& p, const Rational& s) { return {s * p.x, s * p.y}; }

inline Arc scale_arc(const Arc& a, const Rational& s) {
  std::vector<Point> poly;
  poly.reserve(a.polyline.size());
  for (const Point& p : a.polyline) poly.push_back(scale_point(p, s));
  return Arc{scale_point(a.a, s), scale_point(a.b, s), scale_point(a.center, s), s * a.radius,
             std::move(poly), HalfPlane(a.side.nx, a.side.ny, s * a.side.c)};
}

inline ConvexRegion scale_region(const ConvexRegion& r, const Rational& s) {
  if (r.is_empty()) return r;
  std::vector<Point> vs;
  vs.reserve(r.vertices().size());
  for (const Point& p : r.vertices()) vs.push_back(scale_point(p, s));
  return ConvexRegion::hull_of(std::move(vs));
}

}  // namespace detail

// bh(K) as the convex hull of all pairwise minimal arcs at radius diam(K).
// Internally scaled so the diameter is 1, matching the radius-1 setting of
// the construction; exact rational scaling is an isometry up to homothety.
inline ArcHullResult arc_hull(const PointSet& K) {
  require(K.size() >= 2, ErrorCode::EmptyInput, "arc hull needs at least two points");
  const Rational D = diameter(K).first;
  check_internal(D > Rational::zero(), "distinct points with zero diameter");
  const Rational inv = Rational(1) / D;

  std::vector<Point> scaled;
  scaled.reserve(K.size());
  for (const Point& p : K.points()) scaled.push_back(detail::scale_point(p, inv));

  std::vector<Arc> arcs;
  std::vector<Point> cloud;
  for (size_t i = 0; i < scaled.size(); ++i)
    for (size_t j = i + 1; j < scaled.size(); ++j)
      for (Arc& a : minimal_arcs(K.plane(), scaled[i], scaled[j], Rational(1))) {
        for (const Point& v : a.polyline) cloud.push_back(v);
        arcs.push_back(std::move(a));
      }
  ConvexRegion region = ConvexRegion::hull_of(std::move(cloud));

  std::vector<Arc> out;
  out.reserve(arcs.size());
  for (const Arc& a : arcs) out.push_back(detail::scale_arc(a, D));
  return {detail::scale_region(region, D), std::move(out)};
}

// ---------------------------------------------------------------------------
// pivot walk

struct PivotWalkResult {
  std::vector<Ball> balls;
  ConvexRegion region;
  std::vector<std::pair<Point, Point>> trace;  // (point becoming active, event center)
};

namespace detail {

// Walk bookkeeping for one normalized instance (radius-1 balls).
struct WalkContext {
  const NormedPlane* plane;
  std::vector<Point> pts;
  std::vector<ConvexRegion> sphere;            // bd(p_i + B) as polygon
  std::vector<std::vector<HalfPlane>> facets;  // facets of p_i + B

  explicit WalkContext(const NormedPlane& pl, std::vector<Point> points)
      : plane(&pl), pts(std::move(points)) {
    for (const Point& p : pts) {
      sphere.push_back(ball(pl, p, Rational(1)).region);
      facets.push_back(ball_facets(pl, p, Rational(1)));
    }
  }

  Rational dist(size_t i, const Point& z) const { return gauge(*plane, z - pts[i]); }

  std::vector<size_t> incident(const Point& z) const {
    std::vector<size_t> out;
    for (size_t i = 0; i < pts.size(); ++i)
      if (dist(i, z) == Rational(1)) out.push_back(i);
    return out;
  }

  // Clockwise tangent direction of sphere i at boundary point z.
  Point cw_direction(size_t i, const Point& z) const {
    auto pos = locate_on_boundary(sphere[i], z);
    check_internal(pos.has_value(), "walk position fell off its sphere");
    const auto& vs = sphere[i].vertices();
    const size_t n = vs.size();
    if (pos->t.is_zero()) {
      const size_t prev = (pos->edge + n - 1) % n;
      return vs[prev] - vs[pos->edge];
    }
    return vs[pos->edge] - z;
  }

  // Moving from z along d must not leave any incident ball.
  bool feasible_direction(const Point& z, const Point& d,
                          const std::vector<size_t>& inc) const {
    for (size_t i : inc)
      for (const HalfPlane& f : facets[i])
        if (f.eval(z) == f.c && dot(f.normal(), d).sign() > 0) return false;
    return true;
  }

  // CCW boundary offset of q on the sphere around z, as edge index + fraction.
  Rational boundary_offset(const Point& z, const Point& q) const {
    const ConvexRegion ring = ball(*plane, z, Rational(1)).region;
    auto pos = locate_on_boundary(ring, q);
    check_internal(pos.has_value(), "incident point not on the event sphere");
    return Rational(static_cast<int>(pos->edge)) + pos->t;
  }
};

struct WalkEvent {
  Rational s;                    // parameter in (0,1] along the sub-edge
  std::vector<size_t> arrivals;  // points becoming or blocking incident
};

// Earliest parameter in (0,1] at which point q blocks further clockwise
// motion along the segment z -> end: either its gauge rises to 1 from below,
// or a co-incident flat slide reaches a corner of its sphere.
inline std::optional<Rational> event_parameter(const WalkContext& ctx, size_t q, const Point& z,
                                               const Point& dir) {
  const Rational one(1);
  struct Lin {
    Rational alpha, beta;
  };
  std::vector<Lin> lines;
  lines.reserve(ctx.plane->facets.size());
  for (const HalfPlane& f : ctx.plane->facets) {
    // facet value of gauge(z(s) - q) with z(s) = z + s*dir, linear in s
    lines.push_back({f.eval(z - ctx.pts[q]) / f.c, (f.nx * dir.x + f.ny * dir.y) / f.c});
  }
  Rational g0 = 0;
  for (const Lin& l : lines) g0 = max(g0, l.alpha);

  if (g0 < one) {
    // arrival: earliest root of a rising facet that realizes the maximum
    std::optional<Rational> best;
    for (const Lin& l : lines) {
      if (l.beta.sign() <= 0) continue;
      const Rational root = (one - l.alpha) / l.beta;
      if (root.sign() <= 0 || root > one) continue;
      bool realizes = true;
      for (const Lin& m : lines)
        if (m.alpha + root * m.beta > one) {
          realizes = false;
          break;
        }
      if (realizes && (!best || root < *best)) best = root;
    }
    return best;
  }

  check_internal(g0 == one, "walk lost containment of a point");
  // co-incident: slope of the max at s=0+ over active facets
  Rational slope;
  bool first = true;
  for (const Lin& l : lines)
    if (l.alpha == one) {
      if (first || l.beta > slope) slope = l.beta;
      first = false;
    }
  check_internal(!first, "co-incident point with no active facet");
  check_internal(slope.sign() <= 0, "walk direction leaves an incident ball");
  if (slope.sign() < 0) return std::nullopt;  // departs immediately
  // flat slide: blocked when some rising facet reaches 1
  std::optional<Rational> best;
  for (const Lin& l : lines) {
    if (l.beta.sign() <= 0) continue;
    const Rational root = (one - l.alpha) / l.beta;
    if (root.sign() <= 0 || root > one) continue;
    if (!best || root < *best) best = root;
  }
  return best;
}

}  // namespace detail

// The constructive enumeration of supporting unit balls: slide an enclosing
// ball until a point of K touches its sphere, then move the center clockwise
// around the touching point's sphere, pivoting to each newly incident point,
// until the state repeats. Every recorded center keeps K enclosed, and the
// records include every vertex of bi(K,1) on the tour, so the intersection
// of the recorded balls is exactly bh(K). Simultaneous arrivals pivot to the
// feasible candidate farthest clockwise on the event sphere (the largest
// minimal arc from the current pivot).
inline PivotWalkResult pivot_walk(const PointSet& K) {
  require(K.size() >= 2, ErrorCode::EmptyInput, "pivot walk needs at least two points");
  const Rational D = diameter(K).first;
  const Rational inv = Rational(1) / D;
  std::vector<Point> scaled;
  scaled.reserve(K.size());
  for (const Point& p : K.points()) scaled.push_back(detail::scale_point(p, inv));
  detail::WalkContext ctx(K.plane(), std::move(scaled));

  // initial enclosing unit ball from the Chebyshev witness (lambda_K <= 1)
  const auto [lambda_K, witness] = chebyshev_radius(K.plane(), ctx.pts);
  check_internal(lambda_K <= Rational(1), "normalized Chebyshev radius exceeds the diameter");

  // slide until the first point touches the sphere
  Point dir = ctx.pts[0] - witness;
  {
    size_t lex = 0;
    for (size_t i = 1; i < ctx.pts.size(); ++i)
      if (lex_less(ctx.pts[i], ctx.pts[lex])) lex = i;
    dir = ctx.pts[lex] - witness;
    if (dir == Point{0, 0}) dir = ctx.pts[lex == 0 ? 1 : 0] - witness;
  }
  std::optional<Rational> slide;
  for (size_t q = 0; q < ctx.pts.size(); ++q) {
    // last t with gauge(p_q - (witness + t*dir)) <= 1
    std::optional<Rational> bound;
    for (const HalfPlane& f : ctx.facets[q]) {
      const Rational slope = f.nx * dir.x + f.ny * dir.y;
      if (slope.sign() <= 0) continue;
      const Rational root = (f.c - f.eval(witness)) / slope;
      if (!bound || root < *bound) bound = root;
    }
    check_internal(bound.has_value(), "point never exits the sliding ball");
    if (!slide || *bound < *slide) slide = bound;
  }
  check_internal(slide.has_value() && slide->sign() >= 0, "bad initial slide");
  Point z = witness + *slide * dir;

  std::vector<Point> recorded;
  std::set<std::pair<std::pair<std::string, std::string>, std::string>> seen;
  auto point_key = [](const Point& p) {
    return std::make_pair(p.x.str(), p.y.str());
  };
  auto record = [&](const Point& c) {
    for (const Point& r : recorded)
      if (r == c) return;
    recorded.push_back(c);
  };
  auto state_key = [&](size_t pivot, const Point& pos) {
    return std::make_pair(point_key(pos), ctx.pts[pivot].x.str() + "|" + ctx.pts[pivot].y.str());
  };

  auto inc0 = ctx.incident(z);
  check_internal(!inc0.empty(), "initial slide produced no contact");
  size_t pivot = inc0[0];
  for (size_t cand : inc0)
    if (ctx.feasible_direction(z, ctx.cw_direction(cand, z), inc0)) {
      pivot = cand;
      break;
    }
  record(z);
  seen.insert(state_key(pivot, z));

  std::vector<std::pair<Point, Point>> trace;
  for (int guard = 0;; ++guard) {
    check_internal(guard < 100000, "pivot walk failed to terminate");
    auto pos = detail::locate_on_boundary(ctx.sphere[pivot], z);
    check_internal(pos.has_value(), "pivot walk position off its sphere");
    const auto& vs = ctx.sphere[pivot].vertices();
    const size_t n = vs.size();
    const Point end = pos->t.is_zero() ? vs[(pos->edge + n - 1) % n] : vs[pos->edge];
    const Point step = end - z;

    std::optional<detail::WalkEvent> ev;
    for (size_t q = 0; q < ctx.pts.size(); ++q) {
      if (q == pivot) continue;
      auto s = detail::event_parameter(ctx, q, z, step);
      if (!s) continue;
      if (!ev || *s < ev->s) {
        ev = detail::WalkEvent{*s, {q}};
      } else if (*s == ev->s) {
        ev->arrivals.push_back(q);
      }
    }

    if (!ev) {
      // clean slide to the next sphere corner
      const auto key = state_key(pivot, end);
      if (seen.count(key)) break;
      seen.insert(key);
      record(end);
      z = end;
      continue;
    }

    const Point hit = z + ev->s * step;
    auto inc = ctx.incident(hit);
    size_t next = pivot;
    {
      bool found = false;
      Rational best_offset;
      const Rational pivot_offset = ctx.boundary_offset(hit, ctx.pts[pivot]);
      const Rational per(static_cast<int>(K.plane().vertex_count()));
      for (size_t cand : inc) {
        if (!ctx.feasible_direction(hit, ctx.cw_direction(cand, hit), inc)) continue;
        Rational off = pivot_offset - ctx.boundary_offset(hit, ctx.pts[cand]);
        while (off < Rational(0)) off += per;
        while (off >= per) off -= per;
        if (cand == pivot) off = 0;
        if (!found || off > best_offset ||
            (off == best_offset && lex_less(ctx.pts[cand], ctx.pts[next]))) {
          next = cand;
          best_offset = off;
          found = true;
        }
      }
      check_internal(found, "no feasible continuation at a walk event");
    }

    const auto key = state_key(next, hit);
    if (seen.count(key)) break;
    seen.insert(key);
    record(hit);
    if (next != pivot) trace.emplace_back(ctx.pts[next], hit);
    pivot = next;
    z = hit;
  }

  // exact region from all recorded centers; report the arc-carrying subset
  // as the ball list when it already realizes the same intersection
  ConvexRegion region = detail::intersect_ball_regions(K.plane(), recorded, Rational(1));
  std::vector<Point> carriers;
  for (const Point& c : recorded)
    if (ctx.incident(c).size() >= 2) carriers.push_back(c);
  std::vector<Point> centers = recorded;
  if (!carriers.empty() && carriers.size() < recorded.size()) {
    ConvexRegion filtered = detail::intersect_ball_regions(K.plane(), carriers, Rational(1));
    if (filtered == region) centers = carriers;
  }

  PivotWalkResult out;
  for (const Point& c : centers) out.balls.push_back(ball(K.plane(), detail::scale_point(c, D), D));
  out.region = detail::scale_region(region, D);
  for (const auto& [p, c] : trace)
    out.trace.emplace_back(detail::scale_point(p, D), detail::scale_point(c, D));
  return out;
}

}  // namespace ballops
