#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace ballops {

struct Point {
  Rational x, y;

  Point() = default;
  Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}

  friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }
  Point operator-() const { return {-x, -y}; }

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

inline bool lex_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
// Orientation of c relative to directed line a->b: >0 left, <0 right, =0 on.
inline Rational cross(const Point& a, const Point& b, const Point& c) {
  return cross(b - a, c - a);
}
// Rotate by +90 degrees.
inline Point perp(const Point& v) { return {-v.y, v.x}; }

inline Point midpoint(const Point& a, const Point& b) {
  const Rational half(1, 2);
  return {half * (a.x + b.x), half * (a.y + b.y)};
}

// Closed half-plane {p : nx*x + ny*y <= c}. The normal must be non-zero.
struct HalfPlane {
  Rational nx, ny, c;

  HalfPlane(Rational a, Rational b, Rational rhs)
      : nx(std::move(a)), ny(std::move(b)), c(std::move(rhs)) {
    check_internal(!(nx.is_zero() && ny.is_zero()), "half-plane with zero normal");
  }

  Rational eval(const Point& p) const { return nx * p.x + ny * p.y; }
  bool contains(const Point& p) const { return eval(p) <= c; }
  bool strictly_contains(const Point& p) const { return eval(p) < c; }
  Point normal() const { return {nx, ny}; }
};

enum class RegionKind { Empty, Point, Segment, Polygon };

inline const char* region_kind_name(RegionKind k) {
  switch (k) {
    case RegionKind::Empty: return "empty";
    case RegionKind::Point: return "point";
    case RegionKind::Segment: return "segment";
    case RegionKind::Polygon: return "polygon";
  }
  return "?";
}

enum class Containment { Closed, Interior };

// Canonical convex region: a strictly convex CCW polygon starting at its
// lexicographically smallest vertex, or a lex-ordered segment, a point, or
// empty. Equality of canonical forms decides set equality exactly.
class ConvexRegion {
public:
  ConvexRegion() : kind_(RegionKind::Empty) {}

  static ConvexRegion empty() { return ConvexRegion(); }

  static ConvexRegion single(Point p) {
    ConvexRegion r;
    r.kind_ = RegionKind::Point;
    r.vertices_ = {std::move(p)};
    return r;
  }

  static ConvexRegion segment(Point a, Point b) {
    check_internal(a != b, "degenerate segment");
    ConvexRegion r;
    r.kind_ = RegionKind::Segment;
    if (lex_less(b, a)) std::swap(a, b);
    r.vertices_ = {std::move(a), std::move(b)};
    return r;
  }

  // Canonicalizing constructor: convex hull of an arbitrary point list.
  static ConvexRegion hull_of(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) return empty();
    if (pts.size() == 1) return single(pts[0]);
    bool collinear = true;
    for (const Point& p : pts)
      if (cross(pts.front(), pts.back(), p).sign() != 0) {
        collinear = false;
        break;
      }
    if (collinear) return segment(pts.front(), pts.back());
    // Andrew's monotone chain with strict turns, so collinear points drop out.
    std::vector<Point> hull;
    auto build = [&](auto begin, auto end) {
      size_t base = hull.size();
      for (auto it = begin; it != end; ++it) {
        while (hull.size() >= base + 2 &&
               cross(hull[hull.size() - 2], hull[hull.size() - 1], *it).sign() <= 0)
          hull.pop_back();
        hull.push_back(*it);
      }
    };
    build(pts.begin(), pts.end());
    hull.pop_back();
    build(pts.rbegin(), pts.rend());
    hull.pop_back();
    ConvexRegion r;
    r.kind_ = RegionKind::Polygon;
    r.vertices_ = std::move(hull);
    return r;  // starts at lex-smallest because the chain starts there
  }

  RegionKind kind() const { return kind_; }
  bool is_empty() const { return kind_ == RegionKind::Empty; }
  const std::vector<Point>& vertices() const { return vertices_; }

  friend bool operator==(const ConvexRegion& a, const ConvexRegion& b) {
    return a.kind_ == b.kind_ && a.vertices_ == b.vertices_;
  }
  friend bool operator!=(const ConvexRegion& a, const ConvexRegion& b) { return !(a == b); }

  // Outward facet half-planes of a polygon, one per CCW edge.
  std::vector<HalfPlane> facets() const {
    check_internal(kind_ == RegionKind::Polygon, "facets of a non-polygon region");
    std::vector<HalfPlane> out;
    out.reserve(vertices_.size());
    for (size_t i = 0; i < vertices_.size(); ++i) {
      const Point& a = vertices_[i];
      const Point& b = vertices_[(i + 1) % vertices_.size()];
      Point n = -perp(b - a);  // outward for CCW order
      out.emplace_back(n.x, n.y, dot(n, a));
    }
    return out;
  }

  bool contains(const Point& p, Containment mode) const {
    switch (kind_) {
      case RegionKind::Empty:
        return false;
      case RegionKind::Point:
        return mode == Containment::Closed && p == vertices_[0];
      case RegionKind::Segment: {
        if (mode == Containment::Interior) return false;  // no planar interior
        return on_segment(vertices_[0], vertices_[1], p);
      }
      case RegionKind::Polygon: {
        for (size_t i = 0; i < vertices_.size(); ++i) {
          const Point& a = vertices_[i];
          const Point& b = vertices_[(i + 1) % vertices_.size()];
          int s = cross(a, b, p).sign();
          if (s < 0) return false;
          if (s == 0 && mode == Containment::Interior) return false;
        }
        return true;
      }
    }
    return false;
  }

  // Relative interior: interior for polygons, open segment, point equality.
  bool relint_contains(const Point& p) const {
    switch (kind_) {
      case RegionKind::Empty:
        return false;
      case RegionKind::Point:
        return p == vertices_[0];
      case RegionKind::Segment:
        return on_segment(vertices_[0], vertices_[1], p) && p != vertices_[0] &&
               p != vertices_[1];
      case RegionKind::Polygon:
        return contains(p, Containment::Interior);
    }
    return false;
  }

  static bool on_segment(const Point& a, const Point& b, const Point& p) {
    if (a == b) return p == a;
    if (cross(a, b, p).sign() != 0) return false;
    return dot(p - a, b - a) >= Rational::zero() && dot(p - b, a - b) >= Rational::zero();
  }

private:
  RegionKind kind_;
  std::vector<Point> vertices_;
};

inline ConvexRegion convex_hull(const std::vector<Point>& pts) {
  require(!pts.empty(), ErrorCode::EmptyInput, "convex hull of no points");
  return ConvexRegion::hull_of(pts);
}

// ---------------------------------------------------------------------------
// segment utilities

// Exact intersection of closed segments [a1,a2] and [b1,b2]. Returns nothing,
// a point (pair with equal ends), or an overlap segment.
inline std::optional<std::pair<Point, Point>> segment_intersection(const Point& a1,
                                                                   const Point& a2,
                                                                   const Point& b1,
                                                                   const Point& b2) {
  if (a1 == a2) {
    if (ConvexRegion::on_segment(b1, b2, a1)) return std::make_pair(a1, a1);
    return std::nullopt;
  }
  if (b1 == b2) {
    if (ConvexRegion::on_segment(a1, a2, b1)) return std::make_pair(b1, b1);
    return std::nullopt;
  }
  const Point da = a2 - a1, db = b2 - b1;
  const Rational denom = cross(da, db);
  if (denom.sign() != 0) {
    const Rational t = cross(b1 - a1, db) / denom;
    const Rational u = cross(b1 - a1, da) / denom;
    if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
    Point p = a1 + t * da;
    return std::make_pair(p, p);
  }
  // parallel
  if (cross(a1, a2, b1).sign() != 0) return std::nullopt;
  // collinear: overlap of parameter intervals along the shared direction
  auto pick = [&](const Point& p) { return dot(p - a1, da); };
  Point lo_a = a1, hi_a = a2, lo_b = b1, hi_b = b2;
  if (pick(hi_a) < pick(lo_a)) std::swap(lo_a, hi_a);
  if (pick(hi_b) < pick(lo_b)) std::swap(lo_b, hi_b);
  const Point lo = pick(lo_a) < pick(lo_b) ? lo_b : lo_a;
  const Point hi = pick(hi_a) < pick(hi_b) ? hi_a : hi_b;
  if (pick(hi) < pick(lo)) return std::nullopt;
  return std::make_pair(lo, hi);
}

// ---------------------------------------------------------------------------
// half-plane intersection

namespace detail {

// Does some non-zero direction d satisfy n·d <= 0 for every normal? If so the
// (non-empty) region recedes along d. Candidate directions are the normals'
// perpendiculars and negations; an extreme ray of the recession cone always
// lies among them.
inline bool has_recession_direction(const std::vector<Point>& normals) {
  std::vector<Point> candidates;
  candidates.reserve(normals.size() * 3);
  for (const Point& n : normals) {
    candidates.push_back(perp(n));
    candidates.push_back(-perp(n));
    candidates.push_back(-n);
  }
  for (const Point& d : candidates) {
    bool ok = true;
    for (const Point& n : normals)
      if (dot(n, d).sign() > 0) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

inline std::optional<Point> line_intersection(const HalfPlane& a, const HalfPlane& b) {
  const Rational det = a.nx * b.ny - a.ny * b.nx;
  if (det.sign() == 0) return std::nullopt;
  return Point{(a.c * b.ny - a.ny * b.c) / det, (a.nx * b.c - a.c * b.nx) / det};
}

}  // namespace detail

// Exact intersection of closed half-planes. Empty is a value; an unbounded
// intersection is an error (every caller bounds the region with a ball).
inline ConvexRegion halfplane_intersection(const std::vector<HalfPlane>& planes) {
  require(!planes.empty(), ErrorCode::EmptyInput, "no half-planes");

  bool all_parallel = true;
  for (size_t i = 1; i < planes.size() && all_parallel; ++i)
    if (cross(planes[0].normal(), planes[i].normal()).sign() != 0) all_parallel = false;

  if (all_parallel) {
    // 1-D problem along n: s_i * (n·x) <= c_i with a_i = s_i * n.
    const Point n = planes[0].normal();
    const Rational nn = dot(n, n);
    bool has_lo = false, has_hi = false;
    Rational lo, hi;
    for (const HalfPlane& h : planes) {
      // h.normal() = s * n with s = (h.normal()·n)/(n·n)
      const Rational s = dot(h.normal(), n) / nn;
      check_internal(!s.is_zero(), "parallel normal with zero scale");
      const Rational bound = h.c / s;
      if (s.sign() > 0) {
        if (!has_hi || bound < hi) hi = bound;
        has_hi = true;
      } else {
        if (!has_lo || bound > lo) lo = bound;
        has_lo = true;
      }
    }
    if (has_lo && has_hi && hi < lo) return ConvexRegion::empty();
    fail(ErrorCode::UnboundedRegion, "half-plane intersection is a line, slab or half-plane");
  }

  // Candidate vertices: pairwise boundary-line intersections that satisfy all
  // constraints. A bounded non-empty intersection equals their hull.
  std::vector<Point> feasible;
  for (size_t i = 0; i < planes.size(); ++i) {
    for (size_t j = i + 1; j < planes.size(); ++j) {
      auto p = detail::line_intersection(planes[i], planes[j]);
      if (!p) continue;
      bool ok = true;
      for (const HalfPlane& h : planes)
        if (!h.contains(*p)) {
          ok = false;
          break;
        }
      if (ok) feasible.push_back(*p);
    }
  }
  if (feasible.empty()) return ConvexRegion::empty();  // pointed and vertex-free

  std::vector<Point> normals;
  normals.reserve(planes.size());
  for (const HalfPlane& h : planes) normals.push_back(h.normal());
  require(!detail::has_recession_direction(normals), ErrorCode::UnboundedRegion,
          "half-plane intersection unbounded");
  return ConvexRegion::hull_of(std::move(feasible));
}

// ---------------------------------------------------------------------------
// region intersection

namespace detail {

// One Sutherland-Hodgman pass of a convex polygon against a half-plane.
inline std::vector<Point> clip_ring(const std::vector<Point>& ring, const HalfPlane& h) {
  std::vector<Point> out;
  const size_t n = ring.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    const Rational fa = h.eval(a) - h.c;
    const Rational fb = h.eval(b) - h.c;
    if (fa.sign() <= 0) out.push_back(a);
    if ((fa.sign() < 0 && fb.sign() > 0) || (fa.sign() > 0 && fb.sign() < 0)) {
      const Rational t = fa / (fa - fb);
      out.push_back(a + t * (b - a));
    }
  }
  return out;
}

inline ConvexRegion clip_segment(const Point& a, const Point& b,
                                 const std::vector<HalfPlane>& hs) {
  // parameter interval [0,1] clipped by each half-plane
  Rational lo = 0, hi = 1;
  const Point d = b - a;
  for (const HalfPlane& h : hs) {
    const Rational f0 = h.eval(a) - h.c;
    const Rational slope = h.nx * d.x + h.ny * d.y;
    if (slope.sign() == 0) {
      if (f0.sign() > 0) return ConvexRegion::empty();
      continue;
    }
    const Rational t = -f0 / slope;
    if (slope.sign() > 0) {
      if (t < hi) hi = t;
    } else {
      if (t > lo) lo = t;
    }
    if (hi < lo) return ConvexRegion::empty();
  }
  const Point p = a + lo * d, q = a + hi * d;
  if (p == q) return ConvexRegion::single(p);
  return ConvexRegion::segment(p, q);
}

}  // namespace detail

// Exact intersection of two canonical regions, of any kinds.
inline ConvexRegion intersect_regions(const ConvexRegion& a, const ConvexRegion& b) {
  if (a.is_empty() || b.is_empty()) return ConvexRegion::empty();
  if (a.kind() == RegionKind::Point)
    return b.contains(a.vertices()[0], Containment::Closed) ? a : ConvexRegion::empty();
  if (b.kind() == RegionKind::Point)
    return a.contains(b.vertices()[0], Containment::Closed) ? b : ConvexRegion::empty();
  if (a.kind() == RegionKind::Segment && b.kind() == RegionKind::Segment) {
    auto hit = segment_intersection(a.vertices()[0], a.vertices()[1], b.vertices()[0],
                                    b.vertices()[1]);
    if (!hit) return ConvexRegion::empty();
    if (hit->first == hit->second) return ConvexRegion::single(hit->first);
    return ConvexRegion::segment(hit->first, hit->second);
  }
  if (a.kind() == RegionKind::Segment)
    return detail::clip_segment(a.vertices()[0], a.vertices()[1], b.facets());
  if (b.kind() == RegionKind::Segment)
    return detail::clip_segment(b.vertices()[0], b.vertices()[1], a.facets());

  std::vector<Point> ring = a.vertices();
  for (const HalfPlane& h : b.facets()) {
    ring = detail::clip_ring(ring, h);
    if (ring.empty()) return ConvexRegion::empty();
  }
  return ConvexRegion::hull_of(std::move(ring));
}

// Closed containment a <= b checked on a's vertices (valid for convex b).
inline bool region_subset(const ConvexRegion& a, const ConvexRegion& b) {
  if (a.is_empty()) return true;
  for (const Point& v : a.vertices())
    if (!b.contains(v, Containment::Closed)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// boundary components

// Connected components of bd(a) ∩ bd(b) for polygons, each a (possibly
// degenerate) segment. Collinear touching overlaps merge into one component.
inline std::vector<std::pair<Point, Point>> boundary_components(const ConvexRegion& a,
                                                                const ConvexRegion& b) {
  check_internal(a.kind() == RegionKind::Polygon && b.kind() == RegionKind::Polygon,
                 "boundary_components needs polygons");
  std::vector<std::pair<Point, Point>> pieces;
  const auto& va = a.vertices();
  const auto& vb = b.vertices();
  for (size_t i = 0; i < va.size(); ++i)
    for (size_t j = 0; j < vb.size(); ++j) {
      auto hit = segment_intersection(va[i], va[(i + 1) % va.size()], vb[j],
                                      vb[(j + 1) % vb.size()]);
      if (hit) pieces.push_back(*hit);
    }
  if (pieces.empty()) return {};

  // union-find over pieces; pieces connect when they share at least one point
  std::vector<size_t> parent(pieces.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto touches = [&](const std::pair<Point, Point>& s, const std::pair<Point, Point>& t) {
    return segment_intersection(s.first, s.second, t.first, t.second).has_value();
  };
  for (size_t i = 0; i < pieces.size(); ++i)
    for (size_t j = i + 1; j < pieces.size(); ++j)
      if (find(i) != find(j) && touches(pieces[i], pieces[j])) parent[find(i)] = find(j);

  std::vector<std::pair<Point, Point>> components;
  std::vector<size_t> roots;
  for (size_t i = 0; i < pieces.size(); ++i)
    if (find(i) == i) roots.push_back(i);
  for (size_t root : roots) {
    std::vector<Point> endpoints;
    for (size_t i = 0; i < pieces.size(); ++i)
      if (find(i) == root) {
        endpoints.push_back(pieces[i].first);
        endpoints.push_back(pieces[i].second);
      }
    std::sort(endpoints.begin(), endpoints.end(), lex_less);
    endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());
    for (const Point& p : endpoints)
      check_internal(cross(endpoints.front(), endpoints.back(), p).sign() == 0,
                     "bent boundary component");
    components.emplace_back(endpoints.front(), endpoints.back());
  }
  std::sort(components.begin(), components.end(), [](const auto& s, const auto& t) {
    return lex_less(s.first, t.first) || (s.first == t.first && lex_less(s.second, t.second));
  });
  return components;
}

}  // namespace ballops
