#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ball_ops.hpp"
#include "rng.hpp"

namespace ballops {

struct CompletionResult {
  ConvexRegion region;
  Rational epsilon;  // achieved Hausdorff gap between region and bi(region)
  int rounds = 0;
  uint64_t seed = 0;
};

// A set is complete iff it equals the ball intersection of its vertex set at
// its own diameter.
inline bool is_complete(const ConvexRegion& P, const NormedPlane& plane) {
  require(!P.is_empty(), ErrorCode::EmptyInput, "completeness of an empty region");
  const PointSet verts(plane, P.vertices());
  const Rational D = diameter(verts).first;
  return ball_intersection(verts, D).region == P;
}

namespace detail {

inline Rational min_distance_to_set(const NormedPlane& plane, const Point& v,
                                    const std::vector<Point>& pts) {
  Rational best = gauge(plane, v - pts[0]);
  for (size_t i = 1; i < pts.size(); ++i) best = min(best, gauge(plane, v - pts[i]));
  return best;
}

// Shared greedy: repeatedly absorb vertices of the current ball intersection
// (optionally clipped to a fixed ball), farthest-first in a seeded order.
// Each absorbed point lies in bi of the current set, so the diameter never
// changes. Stops when conv equals bi up to eps or no candidate is addable.
inline CompletionResult greedy_completion(const PointSet& K, const Rational& eps, uint64_t seed,
                                          const ConvexRegion* clip, bool* stalled) {
  const NormedPlane& plane = K.plane();
  const Rational D = diameter(K).first;
  std::vector<Point> pts = K.points();
  if (stalled) *stalled = false;

  int rounds = 0;
  const int kMaxRounds = 64;
  while (true) {
    const ConvexRegion bi_region = detail::intersect_ball_regions(plane, pts, D);
    const ConvexRegion hull = ConvexRegion::hull_of(pts);
    const Rational gap = gauge_hausdorff(plane, hull, bi_region);
    if (gap <= eps || rounds >= kMaxRounds) return {hull, gap, rounds, seed};

    ConvexRegion pool = bi_region;
    if (clip) pool = intersect_regions(pool, *clip);
    std::vector<Point> candidates;
    for (const Point& v : pool.vertices()) {
      bool known = false;
      for (const Point& p : pts)
        if (p == v) {
          known = true;
          break;
        }
      if (!known) candidates.push_back(v);
    }
    Rng rng(seed + static_cast<uint64_t>(rounds) * 0x9E37ULL);
    rng.shuffle(candidates);
    std::stable_sort(candidates.begin(), candidates.end(), [&](const Point& a, const Point& b) {
      return min_distance_to_set(plane, a, pts) > min_distance_to_set(plane, b, pts);
    });

    bool added = false;
    for (const Point& v : candidates) {
      bool admissible = true;
      for (const Point& p : pts)
        if (gauge(plane, v - p) > D) {
          admissible = false;
          break;
        }
      if (admissible) {
        pts.push_back(v);
        added = true;
      }
    }
    ++rounds;
    if (!added) {
      if (stalled) *stalled = true;
      const ConvexRegion h = ConvexRegion::hull_of(pts);
      return {h, gauge_hausdorff(plane, h, detail::intersect_ball_regions(plane, pts, D)),
              rounds, seed};
    }
  }
}

}  // namespace detail

// Greedy completion of K: diameter is preserved exactly at every step; eps
// only decides when the conv-vs-bi gap counts as closed. A gap of exactly 0
// certifies an exactly complete result.
inline CompletionResult complete_greedy(const PointSet& K, const Rational& eps, uint64_t seed) {
  require(K.size() >= 2, ErrorCode::EmptyInput, "completion needs at least two points");
  require(eps > Rational::zero(), ErrorCode::InvalidNumber, "eps must be positive");
  return detail::greedy_completion(K, eps, seed, nullptr, nullptr);
}

// Default termination gap from the module contract.
inline Rational default_completion_eps(const PointSet& K) {
  return pow2_inverse(16) * diameter(K).first;
}

// Same greedy restricted to candidates inside B(x, lambda). Best-effort: a
// completion inside the ball exists, but the restricted greedy may stall, in
// which case nothing is returned.
inline std::optional<CompletionResult> complete_in_ball(const PointSet& K, const Point& x,
                                                        const Rational& lambda,
                                                        const Rational& eps, uint64_t seed) {
  require(K.size() >= 2, ErrorCode::EmptyInput, "completion needs at least two points");
  require(eps > Rational::zero(), ErrorCode::InvalidNumber, "eps must be positive");
  const Rational D = diameter(K).first;
  require(lambda + lambda >= D, ErrorCode::RadiusTooSmall, "need lambda >= diam/2");
  for (const Point& p : K.points())
    require(gauge(K.plane(), p - x) <= lambda, ErrorCode::PointsTooFar,
            "K is not inside the prescribed ball");
  const ConvexRegion clip = ball(K.plane(), x, lambda).region;
  bool stalled = false;
  CompletionResult result = detail::greedy_completion(K, eps, seed, &clip, &stalled);
  if (stalled && result.epsilon > eps) return std::nullopt;
  if (result.epsilon > eps) return std::nullopt;
  return result;
}

// n greedy completions under distinct seeds, deduplicated by region.
inline std::vector<CompletionResult> sample_completions(const PointSet& K, int n,
                                                        const Rational& eps, uint64_t seed) {
  require(n >= 1, ErrorCode::InvalidNumber, "need at least one sample");
  std::vector<CompletionResult> out;
  for (int i = 0; i < n; ++i) {
    CompletionResult r = complete_greedy(K, eps, seed + static_cast<uint64_t>(i));
    bool dup = false;
    for (const CompletionResult& existing : out)
      if (existing.region == r.region) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ballops
