#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "norm.hpp"
#include "rng.hpp"

namespace ballops {

// Exact linear program in 1..4 variables: minimize c·x subject to a_i·x <= b_i.
struct LinearProgram {
  int dim = 0;
  std::vector<Rational> objective;                          // size dim
  std::vector<std::pair<std::vector<Rational>, Rational>> constraints;  // (a, b)
};

struct LpSolution {
  Rational value;
  std::vector<Rational> x;
};

namespace detail {

struct LpRow {
  std::vector<Rational> a;
  Rational b;
};

inline bool row_violated(const LpRow& r, const std::vector<Rational>& x) {
  Rational lhs = 0;
  for (size_t j = 0; j < r.a.size(); ++j) lhs += r.a[j] * x[j];
  return lhs > r.b;
}

// Seidel's randomized incremental LP. The first rows are a bounding box, so
// every prefix is bounded and the current optimum always exists.
inline std::vector<Rational> seidel(const std::vector<Rational>& c,
                                    const std::vector<LpRow>& rows, const Rational& box) {
  const size_t d = c.size();
  if (d == 1) {
    Rational lo = -box, hi = box;
    for (const LpRow& r : rows) {
      const Rational& a = r.a[0];
      if (a.is_zero()) {
        if (r.b.sign() < 0) fail(ErrorCode::Infeasible, "contradictory constraints");
        continue;
      }
      const Rational bound = r.b / a;
      if (a.sign() > 0) {
        if (bound < hi) hi = bound;
      } else {
        if (bound > lo) lo = bound;
      }
    }
    if (hi < lo) fail(ErrorCode::Infeasible, "empty feasible interval");
    if (c[0].sign() > 0) return {lo};
    if (c[0].sign() < 0) return {hi};
    return {lo};
  }

  std::vector<Rational> x(d);
  for (size_t k = 0; k < d; ++k)
    x[k] = c[k].sign() > 0 ? -box : (c[k].sign() < 0 ? box : Rational(0));

  for (size_t i = 0; i < rows.size(); ++i) {
    if (!row_violated(rows[i], x)) continue;
    // the optimum of the prefix plus this row lies on its boundary hyperplane
    const LpRow& piv = rows[i];
    size_t k = 0;
    for (size_t j = 1; j < d; ++j)
      if (abs(piv.a[j]) > abs(piv.a[k])) k = j;
    if (piv.a[k].is_zero())  // 0·x <= b violated, so b < 0
      fail(ErrorCode::Infeasible, "contradictory constraints");

    // substitute x_k = (b - sum_{j != k} a_j x_j) / a_k
    std::vector<Rational> sub_c(d - 1);
    {
      size_t idx = 0;
      for (size_t j = 0; j < d; ++j) {
        if (j == k) continue;
        sub_c[idx++] = c[j] - c[k] * piv.a[j] / piv.a[k];
      }
    }
    std::vector<LpRow> sub_rows;
    sub_rows.reserve(i);
    for (size_t r = 0; r < i; ++r) {
      const LpRow& row = rows[r];
      LpRow nr;
      nr.a.resize(d - 1);
      const Rational scale = row.a[k] / piv.a[k];
      size_t idx = 0;
      for (size_t j = 0; j < d; ++j) {
        if (j == k) continue;
        nr.a[idx++] = row.a[j] - scale * piv.a[j];
      }
      nr.b = row.b - scale * piv.b;
      bool zero = true;
      for (const Rational& v : nr.a)
        if (!v.is_zero()) {
          zero = false;
          break;
        }
      if (zero) {
        if (nr.b.sign() < 0) fail(ErrorCode::Infeasible, "contradictory constraints");
        continue;
      }
      sub_rows.push_back(std::move(nr));
    }
    std::vector<Rational> sub_x = seidel(sub_c, sub_rows, box);
    // lift
    size_t idx = 0;
    Rational acc = piv.b;
    for (size_t j = 0; j < d; ++j) {
      if (j == k) continue;
      x[j] = sub_x[idx++];
      acc -= piv.a[j] * x[j];
    }
    x[k] = acc / piv.a[k];
  }
  return x;
}

// Certified bound on the coordinates of any basic solution: scale each row to
// integers; every vertex coordinate is a ratio of integer determinants with
// |det| >= 1 and |det_i| <= d! * maxabs^d.
inline Rational lp_coordinate_bound(const LinearProgram& lp) {
  mpz_class maxabs = 1;
  for (const auto& [a, b] : lp.constraints) {
    mpz_class scale = 1;
    for (const Rational& v : a) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.den().get_mpz_t());
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), b.den().get_mpz_t());
    auto consider = [&](const Rational& v) {
      mpz_class e = abs(v.num() * (scale / v.den()));
      if (e > maxabs) maxabs = e;
    };
    for (const Rational& v : a) consider(v);
    consider(b);
  }
  mpz_class m = 24 * maxabs * maxabs * maxabs * maxabs + 1;  // d! <= 24 for d <= 4
  return Rational(mpq_class(m));
}

inline LpSolution solve_with_box(const LinearProgram& lp, const std::vector<LpRow>& shuffled,
                                 const Rational& box) {
  std::vector<LpRow> rows;
  rows.reserve(2 * lp.dim + shuffled.size());
  for (int k = 0; k < lp.dim; ++k) {
    LpRow up, down;
    up.a.assign(lp.dim, Rational(0));
    down.a.assign(lp.dim, Rational(0));
    up.a[k] = 1;
    up.b = box;
    down.a[k] = -1;
    down.b = box;
    rows.push_back(std::move(up));
    rows.push_back(std::move(down));
  }
  for (const LpRow& r : shuffled) rows.push_back(r);
  std::vector<Rational> x = detail::seidel(lp.objective, rows, box);
  Rational value = 0;
  for (int j = 0; j < lp.dim; ++j) value += lp.objective[j] * x[j];
  return {value, std::move(x)};
}

}  // namespace detail

// Deterministic for a fixed seed. Callers normally guarantee feasibility and
// a bounded optimum; both failure modes are still detected and reported.
inline LpSolution solve_lp(const LinearProgram& lp, uint64_t seed) {
  check_internal(lp.dim >= 1 && lp.dim <= 4, "LP dimension out of range");
  check_internal(static_cast<int>(lp.objective.size()) == lp.dim, "objective size mismatch");

  std::vector<detail::LpRow> shuffled;
  shuffled.reserve(lp.constraints.size());
  for (const auto& [a, b] : lp.constraints) {
    check_internal(static_cast<int>(a.size()) == lp.dim, "constraint size mismatch");
    shuffled.push_back(detail::LpRow{a, b});
  }
  Rng rng(seed);
  rng.shuffle(shuffled);

  const Rational box = detail::lp_coordinate_bound(lp);
  LpSolution sol = detail::solve_with_box(lp, shuffled, box);
  bool box_active = false;
  for (const Rational& v : sol.x)
    if (abs(v) == box) {
      box_active = true;
      break;
    }
  if (box_active) {
    // Either the optimal face is unbounded (value unaffected) or the LP is
    // unbounded below; a strictly larger box distinguishes the two.
    LpSolution wider = detail::solve_with_box(lp, shuffled, box + box + 1);
    require(wider.value == sol.value, ErrorCode::Unbounded, "objective unbounded below");
  }
  return sol;
}

// ---------------------------------------------------------------------------
// Chebyshev radius and gauge distances

namespace detail {
inline constexpr uint64_t kLpSeed = 0x5eed1234abcdef01ULL;  // fixed: witnesses stay stable
}

// Smallest lambda such that K fits in a translate of lambda*B, with one
// optimal center. Variables (x, y, lambda); one constraint per point and facet.
inline std::pair<Rational, Point> chebyshev_radius(const NormedPlane& plane,
                                                   const std::vector<Point>& points) {
  require(!points.empty(), ErrorCode::EmptyInput, "Chebyshev radius of an empty set");
  LinearProgram lp;
  lp.dim = 3;
  lp.objective = {Rational(0), Rational(0), Rational(1)};
  for (const Point& p : points)
    for (const HalfPlane& f : plane.facets)
      lp.constraints.push_back({{-f.nx, -f.ny, -f.c}, -f.eval(p)});
  lp.constraints.push_back({{Rational(0), Rational(0), Rational(-1)}, Rational(0)});
  LpSolution sol = solve_lp(lp, detail::kLpSeed);
  Point center{sol.x[0], sol.x[1]};
  Rational radius = sol.value;
  Rational worst = 0;
  for (const Point& p : points) worst = max(worst, gauge(plane, p - center));
  check_internal(worst == radius, "LP witness infeasible for the Chebyshev radius");
  return {std::move(radius), std::move(center)};
}

// min over z in region of gauge(p - z), solved as a 1-3 variable LP.
inline Rational point_region_distance(const NormedPlane& plane, const Point& p,
                                      const ConvexRegion& region) {
  require(!region.is_empty(), ErrorCode::EmptyInput, "distance to an empty region");
  switch (region.kind()) {
    case RegionKind::Point:
      return gauge(plane, p - region.vertices()[0]);
    case RegionKind::Segment: {
      const Point u = region.vertices()[0], w = region.vertices()[1];
      const Point d = w - u;
      LinearProgram lp;
      lp.dim = 2;  // (t, lambda)
      lp.objective = {Rational(0), Rational(1)};
      for (const HalfPlane& f : plane.facets)
        lp.constraints.push_back({{-(f.nx * d.x + f.ny * d.y), -f.c}, -f.eval(p - u)});
      lp.constraints.push_back({{Rational(1), Rational(0)}, Rational(1)});
      lp.constraints.push_back({{Rational(-1), Rational(0)}, Rational(0)});
      lp.constraints.push_back({{Rational(0), Rational(-1)}, Rational(0)});
      return solve_lp(lp, detail::kLpSeed).value;
    }
    case RegionKind::Polygon: {
      LinearProgram lp;
      lp.dim = 3;  // (zx, zy, lambda)
      lp.objective = {Rational(0), Rational(0), Rational(1)};
      for (const HalfPlane& f : plane.facets)
        lp.constraints.push_back({{-f.nx, -f.ny, -f.c}, -f.eval(p)});
      for (const HalfPlane& f : region.facets())
        lp.constraints.push_back({{f.nx, f.ny, Rational(0)}, f.c});
      lp.constraints.push_back({{Rational(0), Rational(0), Rational(-1)}, Rational(0)});
      return solve_lp(lp, detail::kLpSeed).value;
    }
    default:
      fail(ErrorCode::EmptyInput, "distance to an empty region");
  }
}

// Hausdorff distance under the plane's gauge. By convexity the maximum over
// each region is attained at a vertex.
inline Rational gauge_hausdorff(const NormedPlane& plane, const ConvexRegion& a,
                                const ConvexRegion& b) {
  require(!a.is_empty() && !b.is_empty(), ErrorCode::EmptyInput, "Hausdorff of empty region");
  Rational h = 0;
  for (const Point& v : a.vertices()) h = max(h, point_region_distance(plane, v, b));
  for (const Point& v : b.vertices()) h = max(h, point_region_distance(plane, v, a));
  return h;
}

}  // namespace ballops
