#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace ballops;
using namespace test_helpers;

TEST_CASE("solve_lp one-dimensional") {
  LinearProgram lp;
  lp.dim = 1;
  lp.objective = {Q(1)};
  lp.constraints = {{{Q(-1)}, Q(-1)}, {{Q(-1)}, Q(-2)}};  // lambda >= 1, lambda >= 2
  const LpSolution sol = solve_lp(lp, 3);
  CHECK(sol.value == Q(2));
  CHECK(sol.x == std::vector<Rational>{Q(2)});
}

TEST_CASE("solve_lp detects infeasibility") {
  LinearProgram lp;
  lp.dim = 1;
  lp.objective = {Q(1)};
  lp.constraints = {{{Q(1)}, Q(0)}, {{Q(-1)}, Q(-1)}};  // x <= 0, x >= 1
  CHECK_THROWS_MATCHES(solve_lp(lp, 3), Error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::StartsWith("Infeasible")));
}

TEST_CASE("solve_lp detects an unbounded objective") {
  LinearProgram lp;
  lp.dim = 2;
  lp.objective = {Q(1), Q(0)};
  lp.constraints = {{{Q(0), Q(1)}, Q(1)}, {{Q(0), Q(-1)}, Q(1)}};  // only y is bounded
  CHECK_THROWS_MATCHES(solve_lp(lp, 3), Error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::StartsWith("Unbounded")));
}

TEST_CASE("solve_lp reduces the two-point box instance to 1/2") {
  // minimize lambda subject to |x| <= lambda, |x-1| <= lambda, |y| <= lambda:
  // the Chebyshev program of K = {(0,0),(1,0)} under the box norm
  LinearProgram lp;
  lp.dim = 3;  // (x, y, lambda)
  lp.objective = {Q(0), Q(0), Q(1)};
  lp.constraints = {
      {{Q(1), Q(0), Q(-1)}, Q(0)},  {{Q(-1), Q(0), Q(-1)}, Q(0)},
      {{Q(0), Q(1), Q(-1)}, Q(0)},  {{Q(0), Q(-1), Q(-1)}, Q(0)},
      {{Q(1), Q(0), Q(-1)}, Q(1)},  {{Q(-1), Q(0), Q(-1)}, Q(-1)},
  };
  const LpSolution sol = solve_lp(lp, 9);
  CHECK(sol.value == Q(1, 2));
  CHECK(sol.x[0] == Q(1, 2));
}

TEST_CASE("solve_lp is deterministic per seed") {
  LinearProgram lp;
  lp.dim = 2;
  lp.objective = {Q(1), Q(1)};
  lp.constraints = {{{Q(-1), Q(0)}, Q(2)}, {{Q(0), Q(-1)}, Q(3)}, {{Q(-1), Q(-1)}, Q(4)}};
  const LpSolution a = solve_lp(lp, 7);
  const LpSolution b = solve_lp(lp, 7);
  CHECK(a.value == b.value);
  CHECK(a.x == b.x);
}

TEST_CASE("chebyshev_radius on the module examples") {
  const auto [l1, w1] = chebyshev_radius(linf_plane(), {P(0, 0), P(1, 0), P(0, 1)});
  CHECK(l1 == Q(1, 2));
  CHECK(w1 == PQ(Q(1, 2), Q(1, 2)));

  const auto [l2, w2] = chebyshev_radius(l1_plane(), {P(0, 0), P(2, 0)});
  CHECK(l2 == Q(1));
  CHECK(w2 == P(1, 0));

  const auto [l3, w3] = chebyshev_radius(l1_plane(), {P(5, -3)});
  CHECK(l3 == Q(0));
  CHECK(w3 == P(5, -3));

  CHECK_THROWS_AS(chebyshev_radius(l1_plane(), {}), Error);
}

TEST_CASE("chebyshev witness properties on random instances") {
  Rng rng(21);
  for (int i = 0; i < 40; ++i) {
    const Instance inst = random_instance(rng);
    const PointSet K = inst.set();
    const auto [lam, w] = chebyshev_radius(*inst.plane, K.points());
    Rational worst = 0;
    bool tight = false;
    for (const Point& p : K.points()) {
      const Rational d = gauge(*inst.plane, p - w);
      worst = max(worst, d);
      tight = tight || d == lam;
    }
    CHECK(worst == lam);
    CHECK(tight);

    // optimality certificate through the ball-intersection characterization
    CHECK_FALSE(ball_intersection(K, lam).region.is_empty());
    if (lam > Q(0))
      CHECK(ball_intersection(K, lam - lam * pow2_inverse(20)).region.is_empty());

    // monotonicity and the diameter bounds
    const Rational D = diameter(K).first;
    CHECK(lam <= D);
    CHECK(D <= lam + lam);
    std::vector<Point> sub(K.points().begin(),
                           K.points().begin() + 1 + rng.below(K.size()));
    CHECK(chebyshev_radius(*inst.plane, sub).first <= lam);
  }
}

TEST_CASE("point_region_distance agrees with direct gauges") {
  const NormedPlane& plane = linf_plane();
  CHECK(point_region_distance(plane, P(3, -2), ConvexRegion::single(P(0, 0))) == Q(3));
  CHECK(point_region_distance(plane, P(0, 1), ConvexRegion::segment(P(0, 0), P(1, 0))) == Q(1));
  CHECK(point_region_distance(plane, P(0, 0), box(0, 0, 1, 1)) == Q(0));
  CHECK(point_region_distance(plane, P(-2, 0), box(0, 0, 1, 1)) == Q(2));
}

TEST_CASE("solve_lp treats a violated zero row as infeasible") {
  LinearProgram lp;
  lp.dim = 2;
  lp.objective = {Q(1), Q(0)};
  lp.constraints = {{{Q(0), Q(0)}, Q(-1)},  // 0 <= -1
                    {{Q(-1), Q(0)}, Q(0)},
                    {{Q(0), Q(-1)}, Q(0)}};
  CHECK_THROWS_MATCHES(solve_lp(lp, 1), Error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::StartsWith("Infeasible")));
}
