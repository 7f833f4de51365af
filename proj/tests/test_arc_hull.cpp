#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace ballops;
using namespace test_helpers;

TEST_CASE("minimal_arcs on the diamond norm") {
  const auto arcs = minimal_arcs(l1_plane(), P(0, 0), P(1, 0), Q(1));
  REQUIRE(arcs.size() == 2);
  CHECK(arcs[0].center == PQ(Q(1, 2), Q(-1, 2)));
  CHECK(arcs[0].polyline == std::vector<Point>{P(0, 0), PQ(Q(1, 2), Q(1, 2)), P(1, 0)});
  CHECK(arcs[1].center == PQ(Q(1, 2), Q(1, 2)));
  CHECK(arcs[1].polyline == std::vector<Point>{P(0, 0), PQ(Q(1, 2), Q(-1, 2)), P(1, 0)});
  for (const Arc& a : arcs) {
    for (const Point& v : a.polyline) {
      CHECK(gauge(l1_plane(), v - a.center) == a.radius);
      CHECK(a.side.contains(v));
    }
    CHECK_FALSE(a.side.strictly_contains(a.center));
  }
}

TEST_CASE("minimal_arcs degenerate to the chord on the box norm") {
  const auto arcs = minimal_arcs(linf_plane(), P(0, 0), P(1, 0), Q(1));
  REQUIRE(arcs.size() == 1);  // both arcs coincide with the chord
  CHECK(arcs[0].polyline == std::vector<Point>{P(0, 0), P(1, 0)});
}

TEST_CASE("minimal_arcs preconditions") {
  CHECK_THROWS_MATCHES(minimal_arcs(linf_plane(), P(0, 0), P(0, 0), Q(1)), Error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::StartsWith("CoincidentPoints")));
  CHECK_THROWS_MATCHES(minimal_arcs(linf_plane(), P(0, 0), P(3, 0), Q(1)), Error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::StartsWith("PointsTooFar")));
}

TEST_CASE("arc_hull module examples") {
  const PointSet K1(l1_plane(), {P(0, 0), P(1, 0)});
  const auto r1 = arc_hull(K1);
  CHECK(r1.region ==
        ConvexRegion::hull_of({P(0, 0), PQ(Q(1, 2), Q(1, 2)), P(1, 0), PQ(Q(1, 2), Q(-1, 2))}));

  const PointSet K2(linf_plane(), {P(0, 0), P(1, 0)});
  CHECK(arc_hull(K2).region == ConvexRegion::segment(P(0, 0), P(1, 0)));

  // value established by the nested-bi oracle run at implementation time:
  // bh of the box-norm triangle is the hull below
  const PointSet K3(linf_plane(), {P(0, 0), P(1, 0), P(0, 1)});
  const ConvexRegion expected = ball_hull(K3, Q(1)).region;
  CHECK(arc_hull(K3).region == expected);
  CHECK(expected == ConvexRegion::hull_of({P(0, 0), P(1, 0), P(0, 1), P(1, 1)}));
}

TEST_CASE("pivot_walk module examples") {
  const PointSet K1(l1_plane(), {P(0, 0), P(1, 0)});
  const auto r1 = pivot_walk(K1);
  REQUIRE(r1.balls.size() == 2);
  CHECK(r1.balls[0].center == PQ(Q(1, 2), Q(1, 2)));
  CHECK(r1.balls[1].center == PQ(Q(1, 2), Q(-1, 2)));
  CHECK(r1.region == arc_hull(K1).region);

  const PointSet K2(linf_plane(), {P(0, 0), P(1, 0)});
  const auto r2 = pivot_walk(K2);
  CHECK(r2.region == ConvexRegion::segment(P(0, 0), P(1, 0)));
  std::vector<Point> centers;
  for (const Ball& b : r2.balls) centers.push_back(b.center);
  CHECK(detail::intersect_ball_regions(linf_plane(), centers, Q(1)) == r2.region);

  // the two-point walk visits each point exactly once
  int visits_p = 0, visits_q = 0;
  for (const auto& [pt, center] : r2.trace) {
    if (pt == P(0, 0)) ++visits_p;
    if (pt == P(1, 0)) ++visits_q;
  }
  CHECK(visits_p == 1);
  CHECK(visits_q == 1);
}

TEST_CASE("three-way equality on random instances") {
  Rng rng(41);
  for (int i = 0; i < 60; ++i) {
    const Instance inst = random_instance(rng);
    const PointSet K = inst.set();
    const Rational D = diameter(K).first;
    const ConvexRegion bh = ball_hull(K, D).region;
    CHECK(arc_hull(K).region == bh);
    CHECK(pivot_walk(K).region == bh);
  }
}

TEST_CASE("arc containment in enclosing balls (Lemmas 5.2 and 5.3)") {
  Rng rng(42);
  for (int i = 0; i < 40; ++i) {
    const Instance inst = random_instance(rng);
    const PointSet K = inst.set();
    if (K.size() < 2) continue;
    const NormedPlane& plane = *inst.plane;
    const Rational D = diameter(K).first;

    // any center whose ball of radius diam contains K absorbs all arcs
    const ConvexRegion centers = ball_intersection(K, D).region;
    const Point x = centers.vertices()[rng.below(centers.vertices().size())];
    const ConvexRegion enclosing = ball(plane, x, D).region;
    for (const Arc& a : arc_hull(K).arcs)
      for (const Point& v : a.polyline) CHECK(enclosing.contains(v, Containment::Closed));

    // arcs between two points of a ball stay inside that ball
    const Point p = K.points()[0], q = K.points()[1];
    const Rational lam = gauge(plane, p - q) * Q(3, 2);
    const Point c = midpoint(p, q);
    if (gauge(plane, p - c) <= lam && gauge(plane, q - c) <= lam) {
      const ConvexRegion inside = ball(plane, c, lam).region;
      for (const Arc& a : minimal_arcs(plane, p, q, lam))
        for (const Point& v : a.polyline) CHECK(inside.contains(v, Containment::Closed));
    }
  }
}

TEST_CASE("non-crossing arcs under the Lemma 5.4 hypotheses") {
  Rng rng(43);
  int exercised = 0;
  for (int i = 0; i < 120 && exercised < 25; ++i) {
    const Instance inst = random_instance(rng);
    const PointSet K = inst.set();
    if (K.size() < 3) continue;
    const NormedPlane& plane = *inst.plane;
    const Rational D = diameter(K).first;
    const Point p1 = K.points()[0], p2 = K.points()[1], p3 = K.points()[2];
    if (cross(p1, p2, p3).sign() == 0) continue;
    for (const Arc& a12 : minimal_arcs(plane, p1, p2, D)) {
      if (!ball(plane, a12.center, D).region.contains(p3, Containment::Interior)) continue;
      for (const Arc& a23 : minimal_arcs(plane, p2, p3, D)) {
        if (!ball(plane, a23.center, D).region.contains(p1, Containment::Interior)) continue;
        ++exercised;
        std::vector<Point> c12 = a12.polyline;
        c12.push_back(p1);
        c12.push_back(p2);
        std::vector<Point> c23 = a23.polyline;
        c23.push_back(p2);
        c23.push_back(p3);
        CHECK_FALSE(ConvexRegion::hull_of(c23).contains(p1, Containment::Closed));
        CHECK_FALSE(ConvexRegion::hull_of(c12).contains(p3, Containment::Closed));
      }
    }
  }
  CHECK(exercised >= 10);
}

TEST_CASE("arc center representatives are interchangeable") {
  Rng rng(44);
  for (int i = 0; i < 30; ++i) {
    const Instance inst = random_instance(rng);
    const PointSet K = inst.set();
    if (K.size() < 2) continue;
    const NormedPlane& plane = *inst.plane;
    const Rational D = diameter(K).first;
    const Point p = K.points()[0], q = K.points()[1];
    const auto comps =
        boundary_components(ball(plane, p, D).region, ball(plane, q, D).region);
    for (const auto& [lo, hi] : comps) {
      const auto mid =
          detail::sorted_points(detail::arc_for_center(plane, p, q, D, midpoint(lo, hi)).polyline);
      CHECK(detail::sorted_points(detail::arc_for_center(plane, p, q, D, lo).polyline) == mid);
      CHECK(detail::sorted_points(detail::arc_for_center(plane, p, q, D, hi).polyline) == mid);
    }
  }
}

TEST_CASE("walk balls enclose K and intersect to the hull") {
  Rng rng(45);
  for (int i = 0; i < 30; ++i) {
    const Instance inst = random_instance(rng);
    const PointSet K = inst.set();
    const Rational D = diameter(K).first;
    const PivotWalkResult r = pivot_walk(K);
    std::vector<Point> centers;
    for (const Ball& b : r.balls) {
      centers.push_back(b.center);
      CHECK(b.radius == D);
      for (const Point& p : K.points()) CHECK(b.region.contains(p, Containment::Closed));
    }
    CHECK(detail::intersect_ball_regions(*inst.plane, centers, D) == r.region);
  }
}

TEST_CASE("degenerate configurations keep the three routes equal") {
  const NormedPlane hex = hexagon_plane();
  const NormedPlane oct = octagon_plane();
  struct Case {
    const NormedPlane* plane;
    std::vector<Point> pts;
  };
  std::vector<Case> cases = {
      // collinear sets
      {&linf_plane(), {P(0, 0), P(1, 0), P(2, 0), P(3, 0)}},
      {&l1_plane(), {P(0, 0), P(1, 1), P(2, 2)}},
      {&hex, {P(-1, 2), P(0, 0), PQ(Q(1, 2), Q(-1)), P(1, -2)}},
      // K = translated copy of the unit ball's vertex set (every point critical)
      {&hex, {P(4, 1), P(3, 3), P(1, 3), P(0, 1), P(1, -1), P(3, -1)}},
      {&oct, {P(2, 0), P(2, 1), P(1, 2), P(0, 2), P(-1, 2), P(-2, 1), P(-2, 0), P(-2, -1),
              P(-1, -2), P(0, -2), P(1, -2), P(2, -1)}},
      // antipodal pair through a ball vertex and through an edge midpoint
      {&hex, {P(-2, 0), P(2, 0)}},
      {&hex, {PQ(Q(-3, 2), Q(-1)), PQ(Q(3, 2), Q(1))}},
      // axis-aligned grid with ties in every direction
      {&l1_plane(), {P(0, 0), P(1, 0), P(2, 0), P(0, 1), P(1, 1), P(2, 1)}},
  };
  for (const Case& cs : cases) {
    const PointSet K(*cs.plane, cs.pts);
    const Rational D = diameter(K).first;
    const ConvexRegion bh = ball_hull(K, D).region;
    CHECK(arc_hull(K).region == bh);
    CHECK(pivot_walk(K).region == bh);
    CHECK(oracle_ball_hull(*cs.plane, K, D) == bh);
  }
}
