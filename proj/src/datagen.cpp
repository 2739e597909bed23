#include "fairnet/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fairnet/rng.hpp"

namespace fairnet {

namespace {
constexpr double kInfScore = 1e300;
}

ColoredPointSet gen_points(int n, int d_geom, int k, const std::vector<double>& color_dist,
                           std::uint64_t seed) {
  if (n < 0 || d_geom < 1 || k < 1) fail(ErrorCode::BadParams, "bad generator parameters");
  if (static_cast<int>(color_dist.size()) != k)
    fail(ErrorCode::BadDistribution, "color distribution length must equal k");
  double sum = 0.0;
  for (double p : color_dist) {
    if (p < 0.0) fail(ErrorCode::BadDistribution, "negative color probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) fail(ErrorCode::BadDistribution, "color distribution must sum to 1");

  std::vector<double> cum(k);
  double acc = 0.0;
  for (int c = 0; c < k; ++c) {
    acc += color_dist[c];
    cum[c] = acc;
  }
  cum[k - 1] = 1.0;

  SplitMix64 rng(seed);
  std::vector<double> coords(static_cast<std::size_t>(n) * d_geom);
  std::vector<int> colors(n);
  for (int i = 0; i < n; ++i) {
    for (int d = 0; d < d_geom; ++d) coords[static_cast<std::size_t>(i) * d_geom + d] = rng.uniform01();
    double u = rng.uniform01();
    colors[i] = static_cast<int>(std::lower_bound(cum.begin(), cum.end(), u) - cum.begin());
    if (colors[i] >= k) colors[i] = k - 1;
  }
  return ColoredPointSet(std::move(coords), d_geom, std::move(colors), k);
}

RangeFamily gen_rects(int m, int d_geom, std::uint64_t seed) {
  SplitMix64 rng(seed);
  RangeFamily fam;
  fam.ranges.reserve(m);
  for (int j = 0; j < m; ++j) {
    Rect r;
    r.lo.resize(d_geom);
    r.hi.resize(d_geom);
    for (int d = 0; d < d_geom; ++d) {
      double a = rng.uniform01();
      double b = rng.uniform01();
      r.lo[d] = std::min(a, b);
      r.hi[d] = std::max(a, b);
    }
    fam.ranges.push_back({std::move(r)});
  }
  return fam;
}

RangeFamily gen_halfspaces(int m, const ColoredPointSet& X, std::uint64_t seed) {
  if (X.size() == 0) fail(ErrorCode::EmptyGroup, "halfspaces are anchored to a nonempty point set");
  SplitMix64 rng(seed);
  RangeFamily fam;
  fam.ranges.reserve(m);
  int d = X.dim();
  for (int j = 0; j < m; ++j) {
    Halfspace h;
    h.normal.resize(d);
    double norm = 0.0;
    do {
      norm = 0.0;
      for (int t = 0; t < d; ++t) {
        h.normal[t] = rng.normal();
        norm += h.normal[t] * h.normal[t];
      }
    } while (norm == 0.0);
    norm = std::sqrt(norm);
    for (double& v : h.normal) v /= norm;

    double lo = kInfScore, hi = -kInfScore;
    for (int i = 0; i < X.size(); ++i) {
      double s = 0.0;
      auto pt = X.point(i);
      for (int t = 0; t < d; ++t) s += h.normal[t] * pt[t];
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    // offset below the max score, so at least the argmax point is inside
    h.offset = lo + rng.uniform01() * (hi - lo);
    if (h.offset > hi) h.offset = hi;
    fam.ranges.push_back({std::move(h)});
  }
  return fam;
}

RangeFamily gen_balls(int m, double radius, const ColoredPointSet& X, std::uint64_t seed) {
  if (X.size() == 0) fail(ErrorCode::EmptyGroup, "balls are anchored to a nonempty point set");
  if (!(radius >= 0.0)) fail(ErrorCode::BadParams, "radius must be >= 0");
  SplitMix64 rng(seed);
  RangeFamily fam;
  fam.ranges.reserve(m);
  for (int j = 0; j < m; ++j) {
    int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(X.size())));
    Ball b;
    b.center.assign(X.point(i).begin(), X.point(i).end());
    b.radius = radius;
    fam.ranges.push_back({std::move(b)});
  }
  return fam;
}

RangeFamily gen_topl_ranges(const ColoredPointSet& X, int num_functions, int l,
                            std::uint64_t seed) {
  if (l < 1 || l > X.size()) fail(ErrorCode::BadParams, "top-l requires 1 <= l <= n");
  SplitMix64 rng(seed);
  RangeFamily fam;
  fam.ranges.reserve(num_functions);
  int d = X.dim();
  std::vector<std::pair<double, int>> scored(X.size());
  for (int j = 0; j < num_functions; ++j) {
    std::vector<double> f(d);
    for (int t = 0; t < d; ++t) f[t] = rng.uniform01();
    for (int i = 0; i < X.size(); ++i) {
      double s = 0.0;
      auto pt = X.point(i);
      for (int t = 0; t < d; ++t) s += f[t] * pt[t];
      scored[i] = {s, i};
    }
    // highest score first; ties toward lower index
    std::partial_sort(scored.begin(), scored.begin() + l, scored.end(),
                      [](const auto& a, const auto& b) {
                        if (a.first != b.first) return a.first > b.first;
                        return a.second < b.second;
                      });
    Explicit e;
    e.members.reserve(l);
    for (int i = 0; i < l; ++i) e.members.push_back(scored[i].second);
    std::sort(e.members.begin(), e.members.end());
    fam.ranges.push_back({std::move(e)});
  }
  return fam;
}

RangeFamily gen_summarization_ranges(const ColoredPointSet& X,
                                     const std::vector<double>& thresholds) {
  int d = X.dim();
  if (static_cast<int>(thresholds.size()) != d)
    fail(ErrorCode::BadParams, "one threshold per geometric attribute");
  if (d > 20) fail(ErrorCode::TooManyAttributes, "summarization grid guarded to d <= 20", d);

  const double lo_sentinel = -1e18, hi_sentinel = 1e18;
  RangeFamily fam;
  fam.ranges.reserve(1u << d);
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    Rect r;
    r.lo.resize(d);
    r.hi.resize(d);
    for (int t = 0; t < d; ++t) {
      if (mask & (1u << t)) {
        // strictly above the threshold: nudge past it so cells stay disjoint
        r.lo[t] = std::nextafter(thresholds[t], hi_sentinel);
        r.hi[t] = hi_sentinel;
      } else {
        r.lo[t] = lo_sentinel;
        r.hi[t] = thresholds[t];
      }
    }
    fam.ranges.push_back({std::move(r)});
  }
  return fam;
}

CrCounterexample make_cr_counterexample(int n, std::uint64_t seed) {
  if (n < 2 || n % 2 != 0) fail(ErrorCode::BadParams, "counterexample needs even n >= 2");
  SplitMix64 rng(seed);
  CrCounterexample out;
  std::vector<double> coords;
  coords.reserve(static_cast<std::size_t>(n) * 2);
  std::vector<int> colors;
  colors.reserve(n);
  // red (color 0) on the left half-plane, blue (color 1) on the right
  for (int i = 0; i < n; ++i) {
    bool red = i < n / 2;
    coords.push_back(red ? rng.uniform01() * 0.4 : 0.6 + rng.uniform01() * 0.4);
    coords.push_back(rng.uniform01());
    colors.push_back(red ? 0 : 1);
  }
  out.points = ColoredPointSet(std::move(coords), 2, std::move(colors), 2);
  // R* separates red exactly: x <= 0.5  <=>  -x >= -0.5
  out.ranges.ranges.push_back({Halfspace{{-1.0, 0.0}, -0.5}});
  // plus a couple of plain ranges so the family is not a single row
  out.ranges.ranges.push_back({Rect{{0.0, 0.0}, {1.0, 1.0}}});
  out.ranges.ranges.push_back({Halfspace{{1.0, 0.0}, 0.6}});
  return out;
}

std::pair<ColoredPointSet, TrimReport> trim_to_powers(const ColoredPointSet& X) {
  std::vector<int> counts = X.color_counts();
  std::vector<int> keep_count(counts.size(), 0);
  for (std::size_t c = 0; c < counts.size(); ++c) {
    int p = counts[c];
    int keep = 1;
    while (keep * 2 <= p) keep *= 2;
    keep_count[c] = p > 0 ? keep : 0;
  }

  TrimReport report;
  std::vector<int> taken(counts.size(), 0);
  std::vector<double> coords;
  std::vector<int> colors;
  std::vector<double> weights;
  for (int i = 0; i < X.size(); ++i) {
    int c = X.color(i);
    if (taken[c] < keep_count[c]) {
      taken[c]++;
      report.kept.push_back(i);
      auto pt = X.point(i);
      coords.insert(coords.end(), pt.begin(), pt.end());
      colors.push_back(c);
      if (X.has_weights()) weights.push_back(X.weight(i));
    } else {
      report.dropped.push_back(i);
    }
  }
  report.kept_per_color = keep_count;
  int total = static_cast<int>(report.kept.size());
  report.total_is_pow2 = total > 0 && (total & (total - 1)) == 0;

  std::optional<std::vector<double>> w;
  if (X.has_weights()) w = std::move(weights);
  ColoredPointSet trimmed(std::move(coords), X.dim(), std::move(colors), X.num_colors(),
                          std::move(w));
  return {std::move(trimmed), std::move(report)};
}

}  // namespace fairnet
