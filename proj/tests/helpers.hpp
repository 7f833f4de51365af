#pragma once

#include "ballops/ballops.hpp"

namespace test_helpers {

using namespace ballops;

inline Rational Q(int n) { return Rational(n); }
inline Rational Q(int n, int d) { return Rational(n, d); }
inline Point P(int x, int y) { return Point{Rational(x), Rational(y)}; }
inline Point PQ(Rational x, Rational y) { return Point{std::move(x), std::move(y)}; }

inline const NormedPlane& linf_plane() {
  static const NormedPlane plane =
      validate_plane(ConvexRegion::hull_of({P(1, 1), P(-1, 1), P(-1, -1), P(1, -1)}));
  return plane;
}

inline const NormedPlane& l1_plane() {
  static const NormedPlane plane =
      validate_plane(ConvexRegion::hull_of({P(1, 0), P(0, 1), P(-1, 0), P(0, -1)}));
  return plane;
}

inline ConvexRegion box(Rational x0, Rational y0, Rational x1, Rational y1) {
  return ConvexRegion::hull_of({PQ(x0, y0), PQ(x1, y0), PQ(x1, y1), PQ(x0, y1)});
}

}  // namespace test_helpers
