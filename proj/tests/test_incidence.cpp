#include <doctest.h>

#include <bit>
#include <set>

#include "fairnet/incidence.hpp"
#include "fairnet/rng.hpp"
#include "test_support.hpp"

using namespace fairnet;
using fairnet::testing::example_instance;
using fairnet::testing::points2d;

TEST_CASE("materialize basics") {
  ColoredPointSet X = points2d({0.2, 0.2, 0.8, 0.8}, {0, 1}, 2);
  RangeFamily fam;
  fam.ranges.push_back({Rect{{0, 0}, {1, 1}}});
  IncidenceMatrix inc = materialize(X, fam);
  CHECK(inc.rows() == 1);
  CHECK(inc.cardinality(0) == 2);

  IncidenceMatrix empty = materialize(X, RangeFamily{});
  CHECK(empty.rows() == 0);
}

TEST_CASE("example instance: r1 has cardinality 5") {
  auto ex = example_instance();
  IncidenceMatrix inc = materialize(ex.points, ex.ranges);
  CHECK(inc.cardinality(0) == 5);
  CHECK(inc.cardinality(1) == 6);
}

TEST_CASE("cardinality cache equals row popcount") {
  ColoredPointSet X = gen_points(200, 2, 3, {0.5, 0.3, 0.2}, 11);
  IncidenceMatrix inc = materialize(X, gen_rects(40, 2, 12));
  for (int r = 0; r < inc.rows(); ++r) {
    int pop = 0;
    for (auto w : inc.row_words(r)) pop += std::popcount(w);
    CHECK(pop == inc.cardinality(r));
  }
}

TEST_CASE("weight cache matches member weight sums") {
  auto base = gen_points(50, 2, 2, {0.5, 0.5}, 3);
  std::vector<double> w(50);
  SplitMix64 rng(4);
  double total = 0;
  for (auto& v : w) {
    v = 0.01 + rng.uniform01();
    total += v;
  }
  for (auto& v : w) v /= total;
  ColoredPointSet X = base.with_weights(w);
  IncidenceMatrix inc = materialize(X, gen_rects(20, 2, 5));
  for (int r = 0; r < inc.rows(); ++r) {
    double s = 0;
    for (int i : inc.row_members(r)) s += X.weight(i);
    CHECK(inc.weight_sum(r) == doctest::Approx(s).epsilon(1e-12));
  }
}

TEST_CASE("restrict: identity, empty, and duplicate collapse") {
  ColoredPointSet X = points2d({0.1, 0.1, 0.5, 0.5, 0.9, 0.9}, {0, 0, 1}, 2);
  RangeFamily fam;
  fam.ranges.push_back({Rect{{0, 0}, {0.6, 0.6}}});   // {0,1}
  fam.ranges.push_back({Rect{{0, 0}, {0.55, 0.55}}}); // {0,1} again
  fam.ranges.push_back({Rect{{0.8, 0.8}, {1, 1}}});   // {2}
  IncidenceMatrix inc = materialize(X, fam);

  std::vector<int> all = {0, 1, 2};
  IncidenceMatrix same = restrict_to(inc, all);
  CHECK(same.rows() == 2);  // duplicates collapse

  IncidenceMatrix none = restrict_to(inc, {});
  CHECK(none.rows() == 0);

  IncidenceMatrix left = restrict_to(inc, {0, 1});
  CHECK(left.rows() == 1);
  CHECK(left.cardinality(0) == 2);

  CHECK_THROWS_AS((void)restrict_to(inc, {5}), Error);
}

TEST_CASE("restrict equals exhaustive induced-subset computation on small instances") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    int n = 6 + static_cast<int>(seed);
    ColoredPointSet X = gen_points(n, 2, 2, {0.5, 0.5}, seed + 100);
    IncidenceMatrix inc = materialize(X, gen_rects(24, 2, seed + 200));
    SplitMix64 rng(seed);
    std::vector<int> T;
    for (int i = 0; i < n; ++i)
      if (rng.uniform01() < 0.6) T.push_back(i);

    // oracle: distinct nonempty induced subsets via direct set intersection
    std::set<std::vector<int>> expected;
    for (int r = 0; r < inc.rows(); ++r) {
      std::vector<int> induced;
      for (std::size_t c = 0; c < T.size(); ++c)
        if (inc.get(r, T[c])) induced.push_back(static_cast<int>(c));
      if (!induced.empty()) expected.insert(induced);
    }

    IncidenceMatrix res = restrict_to(inc, T);
    std::set<std::vector<int>> got;
    for (int r = 0; r < res.rows(); ++r) got.insert(res.row_members(r));
    CHECK(got == expected);
  }
}

TEST_CASE("heavy_ranges thresholds") {
  auto ex = example_instance();
  IncidenceMatrix inc = materialize(ex.points, ex.ranges);
  SUBCASE("eps = 5/18 keeps r1 and r2, drops a 4-point range") {
    RangeFamily fam = ex.ranges;
    fam.ranges.push_back({Rect{{-0.8, 2.75}, {1.5, 3.3}}});  // 4 points
    IncidenceMatrix wider = materialize(ex.points, fam);
    REQUIRE(wider.cardinality(2) == 4);
    std::vector<int> heavy = heavy_ranges(wider, 5.0 / 18.0, false);
    CHECK(heavy == std::vector<int>{0, 1});
  }
  SUBCASE("eps = 1/n keeps every nonempty range") {
    std::vector<int> heavy = heavy_ranges(inc, 1.0 / 18.0, false);
    CHECK(heavy == std::vector<int>{0, 1});
  }
  SUBCASE("eps = 1 keeps only full ranges") {
    RangeFamily fam = ex.ranges;
    fam.ranges.push_back({Rect{{-3, 0}, {2, 4}}});  // everything
    IncidenceMatrix wider = materialize(ex.points, fam);
    std::vector<int> heavy = heavy_ranges(wider, 1.0, false);
    CHECK(heavy == std::vector<int>{2});
  }
  SUBCASE("bad eps") {
    CHECK_THROWS_AS((void)heavy_ranges(inc, 0.0, false), Error);
    CHECK_THROWS_AS((void)heavy_ranges(inc, 1.5, false), Error);
  }
}

TEST_CASE("heavy_ranges(1/n) plus empty rows covers all rows") {
  ColoredPointSet X = gen_points(40, 2, 2, {0.5, 0.5}, 21);
  IncidenceMatrix inc = materialize(X, gen_rects(60, 2, 22));
  std::vector<int> heavy = heavy_ranges(inc, 1.0 / X.size(), false);
  std::set<int> got(heavy.begin(), heavy.end());
  for (int r = 0; r < inc.rows(); ++r)
    if (inc.cardinality(r) == 0) got.insert(r);
  CHECK(static_cast<int>(got.size()) == inc.rows());
}
