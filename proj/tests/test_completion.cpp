#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace ballops;
using namespace test_helpers;

namespace {
const Rational kEps(1, 1 << 16);
}

TEST_CASE("is_complete module examples") {
  CHECK(is_complete(box(0, 0, 1, 1), linf_plane()));
  CHECK_FALSE(is_complete(ConvexRegion::segment(P(0, 0), P(1, 0)), linf_plane()));
  CHECK(is_complete(
      ConvexRegion::hull_of({P(0, 0), PQ(Q(1, 2), Q(1, 2)), P(1, 0), PQ(Q(1, 2), Q(-1, 2))}),
      l1_plane()));
  CHECK(is_complete(ConvexRegion::single(P(3, 4)), l1_plane()));
}

TEST_CASE("complete_greedy on the diamond pair converges exactly in one round") {
  const PointSet K(l1_plane(), {P(0, 0), P(1, 0)});
  const CompletionResult r = complete_greedy(K, kEps, 5);
  CHECK(r.region ==
        ConvexRegion::hull_of({P(0, 0), PQ(Q(1, 2), Q(1, 2)), P(1, 0), PQ(Q(1, 2), Q(-1, 2))}));
  CHECK(r.rounds == 1);
  CHECK(r.epsilon.is_zero());
}

TEST_CASE("complete_greedy on the box pair yields a seed-dependent unit square") {
  const PointSet K(linf_plane(), {P(0, 0), P(1, 0)});
  for (uint64_t seed : {1ull, 2ull, 3ull, 9ull, 77ull}) {
    const CompletionResult r = complete_greedy(K, kEps, seed);
    REQUIRE(r.region.kind() == RegionKind::Polygon);
    REQUIRE(r.epsilon.is_zero());
    // a unit square [0,1] x [c, c+1] with c in [-1, 0]
    const auto& vs = r.region.vertices();
    REQUIRE(vs.size() == 4);
    const Rational c = vs[0].y;
    CHECK(r.region == box(Q(0), c, Q(1), c + Q(1)));
    CHECK(Q(-1) <= c);
    CHECK(c <= Q(0));
    CHECK(is_complete(r.region, linf_plane()));
  }
}

TEST_CASE("complete_greedy leaves a complete set unchanged with rounds = 0") {
  const PointSet K(linf_plane(), {P(0, 0), P(1, 0), P(1, 1), P(0, 1)});
  const CompletionResult r = complete_greedy(K, kEps, 3);
  CHECK(r.region == box(0, 0, 1, 1));
  CHECK(r.rounds == 0);
  CHECK(r.epsilon.is_zero());
}

TEST_CASE("complete_in_ball module examples") {
  const PointSet K(linf_plane(), {P(0, 0), P(1, 0)});
  const auto r = complete_in_ball(K, PQ(Q(1, 2), Q(0)), Q(1), kEps, 4);
  REQUIRE(r.has_value());
  CHECK(region_subset(r->region, box(Q(-1, 2), Q(-1), Q(3, 2), Q(1))));
  CHECK(is_complete(r->region, linf_plane()));

  const PointSet K1(l1_plane(), {P(0, 0), P(1, 0)});
  const auto r1 = complete_in_ball(K1, PQ(Q(1, 2), Q(0)), Q(1), kEps, 4);
  REQUIRE(r1.has_value());
  CHECK(r1->region ==
        ConvexRegion::hull_of({P(0, 0), PQ(Q(1, 2), Q(1, 2)), P(1, 0), PQ(Q(1, 2), Q(-1, 2))}));

  // a complete input stays itself
  const PointSet sq(linf_plane(), {P(0, 0), P(1, 0), P(1, 1), P(0, 1)});
  const auto r2 = complete_in_ball(sq, PQ(Q(1, 2), Q(1, 2)), Q(1, 2), kEps, 4);
  REQUIRE(r2.has_value());
  CHECK(r2->region == box(0, 0, 1, 1));
  CHECK(r2->rounds == 0);
}

TEST_CASE("sample_completions dedupes by region") {
  const PointSet unique_case(l1_plane(), {P(0, 0), P(1, 0)});
  CHECK(sample_completions(unique_case, 5, kEps, 10).size() == 1);

  const PointSet boxpair(linf_plane(), {P(0, 0), P(1, 0)});
  CHECK(sample_completions(boxpair, 12, kEps, 10).size() > 1);

  const PointSet degenerate(linf_plane(), {P(2, 2), P(3, 2)});
  CHECK_FALSE(sample_completions(degenerate, 3, kEps, 1).empty());
}

TEST_CASE("completion sandwich and absorption on random instances") {
  Rng rng(61);
  for (int i = 0; i < 30; ++i) {
    const Instance inst = random_instance(rng);
    const PointSet K = inst.set();
    const NormedPlane& plane = *inst.plane;
    const Rational D = diameter(K).first;
    const Rational eps = default_completion_eps(K);
    const ConvexRegion bh = ball_hull(K, D).region;
    const ConvexRegion bi = ball_intersection(K, D).region;
    const auto [lam, ch] = chebyshev_set(K);

    for (const CompletionResult& comp : sample_completions(K, 5, eps, 100 + i)) {
      CHECK(region_subset(bh, comp.region));
      CHECK(region_subset(comp.region, bi));
      for (const Point& p : K.points()) CHECK(comp.region.contains(p, Containment::Closed));
      const PointSet V(plane, comp.region.vertices());
      CHECK(diameter(V).first == D);
      CHECK(chebyshev_radius(plane, V.points()).first >= lam);
      // Corollary 3.5
      for (const Point& p : K.points()) {
        bool covers = true;
        for (const Point& q : K.points()) covers = covers && gauge(plane, q - p) <= D;
        if (covers) CHECK(region_subset(comp.region, ball(plane, p, D).region));
      }
    }

    // Prop 3.3 union direction: every bi vertex extends to a completion
    for (const Point& y : bi.vertices()) {
      std::vector<Point> ext = K.points();
      ext.push_back(y);
      const PointSet Ky(plane, ext);
      CHECK(diameter(Ky).first == D);
      const CompletionResult comp = complete_greedy(Ky, eps, 7);
      CHECK(comp.epsilon <= eps);
      CHECK(comp.region.contains(y, Containment::Closed));
    }

    // Lemma 3.7 at each Chebyshev vertex
    for (const Point& x : ch.vertices()) {
      const auto comp = complete_in_ball(K, x, lam, eps, 13);
      if (!comp) continue;
      const PointSet V(plane, comp->region.vertices());
      const auto [lam_c, ch_c] = chebyshev_set(V);
      CHECK(lam_c == lam);
      CHECK(region_subset(ch_c, ch));
      CHECK(ch_c.contains(x, Containment::Closed));
    }

    // Corollary 3.12 when the ball hull is already complete
    if (is_complete(bh, plane)) {
      const PointSet V(plane, bh.vertices());
      const auto [lam_c, ch_c] = chebyshev_set(V);
      CHECK(lam_c == lam);
      CHECK(ch_c == ch);
      for (const CompletionResult& comp : sample_completions(K, 5, eps, 500 + i))
        CHECK(comp.region == bh);
    }
  }
}

TEST_CASE("the diamond pair has the unique completion with Ch at (1/2, 0)") {
  const PointSet K(l1_plane(), {P(0, 0), P(1, 0)});
  const ConvexRegion bh = ball_hull(K, Q(1)).region;
  REQUIRE(is_complete(bh, l1_plane()));
  const auto [lam, ch] = chebyshev_set(K);
  CHECK(ch == ConvexRegion::single(PQ(Q(1, 2), Q(0))));
  const PointSet V(l1_plane(), bh.vertices());
  const auto [lam_c, ch_c] = chebyshev_set(V);
  CHECK(lam_c == lam);
  CHECK(ch_c == ch);
}
