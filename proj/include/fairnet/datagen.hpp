#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fairnet/geometry.hpp"

namespace fairnet {

// Uniform points in [0,1]^d with i.i.d. colors from color_dist (sums to 1).
ColoredPointSet gen_points(int n, int d_geom, int k, const std::vector<double>& color_dist,
                           std::uint64_t seed);

// Random axis-aligned rectangles in the unit cube (corners uniform).
RangeFamily gen_rects(int m, int d_geom, std::uint64_t seed);

// Random halfspaces; the offset is drawn between the min and max point score
// so every halfspace contains at least one point of X.
RangeFamily gen_halfspaces(int m, const ColoredPointSet& X, std::uint64_t seed);

// Balls of fixed radius centered at randomly selected points of X.
RangeFamily gen_balls(int m, double radius, const ColoredPointSet& X, std::uint64_t seed);

// Top-l ranges: for each random nonnegative ranking vector, the explicit set
// of the l highest dot-product scores (ties resolved toward lower index).
RangeFamily gen_topl_ranges(const ColoredPointSet& X, int num_functions, int l,
                            std::uint64_t seed);

// The grid of up to 2^d orthant rectangles induced by one threshold per
// attribute. The cells partition space (boundaries go to the low side).
RangeFamily gen_summarization_ranges(const ColoredPointSet& X,
                                     const std::vector<double>& thresholds);

// The packaged CR-infeasibility counterexample: half red, half blue, plus a
// halfspace separating red exactly.
struct CrCounterexample {
  ColoredPointSet points;
  RangeFamily ranges;
};
CrCounterexample make_cr_counterexample(int n, std::uint64_t seed);

struct TrimReport {
  std::vector<int> kept;             // original indices kept, sorted
  std::vector<int> dropped;          // original indices dropped, sorted
  std::vector<int> kept_per_color;   // resulting per-color counts
  bool total_is_pow2 = false;
};

// Keeps, per color, the lowest-index 2^floor(log2 |X_c|) points. The total
// afterwards need not be a power of two; the report says whether it is.
std::pair<ColoredPointSet, TrimReport> trim_to_powers(const ColoredPointSet& X);

}  // namespace fairnet
