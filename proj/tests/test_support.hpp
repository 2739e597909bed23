#pragma once

#include <vector>

#include "fairnet/datagen.hpp"
#include "fairnet/geometry.hpp"
#include "fairnet/incidence.hpp"

namespace fairnet::testing {

// 2D points from flat {x,y,...} coordinates.
inline ColoredPointSet points2d(std::vector<double> coords, std::vector<int> colors, int k) {
  return ColoredPointSet(std::move(coords), 2, std::move(colors), k);
}

// The 18-point example instance: 9 blue (color 0), 9 red (color 1), with the
// two drawn query rectangles r1 and r2.
struct ExampleInstance {
  ColoredPointSet points;
  RangeFamily ranges;  // [0]=r1, [1]=r2
};

inline ExampleInstance example_instance() {
  std::vector<double> coords = {
      // blue
      -2.0, 1.5, -1.0, 1.0, -2.0, 3.0, 1.0, 2.5, 1.0, 3.0,
      -0.2, 2.0, -0.6, 1.7, 0.1, 2.9, -0.4, 3.0,
      // red
      -2.1, 2.5, -1.5, 1.0, 1.4, 2.0, 0.0, 3.5, 1.3, 2.8,
      0.2, 1.0, -0.3, 1.1, -1.0, 1.4, -0.6, 3.1};
  std::vector<int> colors(18);
  for (int i = 0; i < 18; ++i) colors[i] = i < 9 ? 0 : 1;
  ExampleInstance ex{ColoredPointSet(std::move(coords), 2, std::move(colors), 2), {}};
  ex.ranges.ranges.push_back({Rect{{-0.8, 2.6}, {1.5, 3.3}}});  // r1, 5 points
  ex.ranges.ranges.push_back({Rect{{-1.2, 0.5}, {0.5, 2.2}}});  // r2, 6 points
  return ex;
}

// All distinct axis-aligned rectangles with corners on the instance's
// coordinate values (a materialized stand-in for "any possible rectangle").
inline RangeFamily all_coordinate_rects(const ColoredPointSet& X) {
  std::vector<double> xs, ys;
  for (int i = 0; i < X.size(); ++i) {
    xs.push_back(X.point(i)[0]);
    ys.push_back(X.point(i)[1]);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  RangeFamily fam;
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = a; b < xs.size(); ++b)
      for (std::size_t c = 0; c < ys.size(); ++c)
        for (std::size_t d = c; d < ys.size(); ++d)
          fam.ranges.push_back({Rect{{xs[a], ys[c]}, {xs[b], ys[d]}}});
  return fam;
}

}  // namespace fairnet::testing
