#include <doctest.h>

#include "fairnet/geometry.hpp"
#include "test_support.hpp"

using namespace fairnet;
using fairnet::testing::points2d;

TEST_CASE("rect membership is boundary-inclusive") {
  Range r{Rect{{0, 0}, {1, 1}}};
  std::vector<double> corner = {1.0, 1.0};
  CHECK(contains(r, corner));
  std::vector<double> outside = {1.0, 1.0000001};
  CHECK_FALSE(contains(r, outside));
  std::vector<double> inside = {0.5, 0.0};
  CHECK(contains(r, inside));
}

TEST_CASE("halfspace membership is dot >= offset") {
  Range r{Halfspace{{1, 0}, 0.0}};
  std::vector<double> neg = {-0.5, 3.0};
  CHECK_FALSE(contains(r, neg));
  std::vector<double> boundary = {0.0, -7.0};
  CHECK(contains(r, boundary));
}

TEST_CASE("ball boundary point is inside") {
  Range r{Ball{{0, 0}, 1.0}};
  std::vector<double> p = {0.6, 0.8};
  CHECK(contains(r, p));
  std::vector<double> q = {0.61, 0.8};
  CHECK_FALSE(contains(r, q));
}

TEST_CASE("explicit ranges resolve by index") {
  ColoredPointSet X = points2d({0, 0, 1, 1, 2, 2}, {0, 0, 1}, 2);
  Range r{Explicit{{0, 2}}};
  CHECK(contains(r, X, 0));
  CHECK_FALSE(contains(r, X, 1));
  CHECK(contains(r, X, 2));
  std::vector<double> coords = {0.0, 0.0};
  CHECK_THROWS_AS((void)contains(r, coords), Error);
}

TEST_CASE("contains agrees with a direct re-evaluation of the inequality") {
  // property: random ranges and points, recomputed with plain arithmetic
  fairnet::ColoredPointSet X = gen_points(64, 3, 2, {0.5, 0.5}, 7);
  RangeFamily rects = gen_rects(16, 3, 8);
  RangeFamily halfs = gen_halfspaces(16, X, 9);
  RangeFamily balls = gen_balls(16, 0.4, X, 10);
  for (int i = 0; i < X.size(); ++i) {
    auto pt = X.point(i);
    for (const Range& r : rects.ranges) {
      const auto& rc = std::get<Rect>(r.shape);
      bool expect = true;
      for (int t = 0; t < 3; ++t)
        if (!(rc.lo[t] <= pt[t] && pt[t] <= rc.hi[t])) expect = false;
      CHECK(contains(r, pt) == expect);
    }
    for (const Range& r : halfs.ranges) {
      const auto& hs = std::get<Halfspace>(r.shape);
      double dot = hs.normal[0] * pt[0] + hs.normal[1] * pt[1] + hs.normal[2] * pt[2];
      CHECK(contains(r, pt) == (dot >= hs.offset));
    }
    for (const Range& r : balls.ranges) {
      const auto& b = std::get<Ball>(r.shape);
      double d2 = 0;
      for (int t = 0; t < 3; ++t) d2 += (pt[t] - b.center[t]) * (pt[t] - b.center[t]);
      CHECK(contains(r, pt) == (std::sqrt(d2) <= b.radius));
    }
  }
}

TEST_CASE("point set invariants are enforced") {
  CHECK_THROWS_AS(points2d({0, 0}, {0, 1}, 2), Error);        // coords vs colors
  CHECK_THROWS_AS(points2d({0, 0, 1, 1}, {0, 2}, 2), Error);  // color out of range
  CHECK_THROWS_AS(ColoredPointSet({0, 0}, 2, {0}, 1, std::vector<double>{0.0}), Error);
  CHECK_THROWS_AS(ColoredPointSet({0, 0}, 2, {0}, 1, std::vector<double>{-1.0}), Error);
}

TEST_CASE("range validation catches malformed shapes") {
  CHECK_THROWS_AS(validate_range(Range{Rect{{1, 0}, {0, 1}}}, 2, 4), Error);
  CHECK_THROWS_AS(validate_range(Range{Halfspace{{0, 0}, 1.0}}, 2, 4), Error);
  CHECK_THROWS_AS(validate_range(Range{Ball{{0, 0}, -1.0}}, 2, 4), Error);
  CHECK_THROWS_AS(validate_range(Range{Explicit{{2, 1}}}, 2, 4), Error);
  CHECK_THROWS_AS(validate_range(Range{Explicit{{0, 9}}}, 2, 4), Error);
  CHECK_NOTHROW(validate_range(Range{Explicit{{0, 3}}}, 2, 4));
}
