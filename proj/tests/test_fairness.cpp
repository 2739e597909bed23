#include <doctest.h>

#include "fairnet/fairness.hpp"
#include "fairnet/rng.hpp"
#include "test_support.hpp"

using namespace fairnet;
using fairnet::testing::points2d;

namespace {

ColoredPointSet mixed(int reds, int blues) {
  std::vector<double> coords;
  std::vector<int> colors;
  for (int i = 0; i < reds + blues; ++i) {
    coords.push_back(i);
    coords.push_back(0);
    colors.push_back(i < reds ? 0 : 1);
  }
  return ColoredPointSet(std::move(coords), 2, std::move(colors), 2);
}

}  // namespace

TEST_CASE("dp ratios") {
  CHECK(GroupRatios::dp(mixed(4, 4)).taus() == std::vector<double>{0.5, 0.5});
  CHECK(GroupRatios::dp(mixed(6, 2)).taus() == std::vector<double>{0.75, 0.25});

  // weighted: red {1,1}, blue {2} -> (0.5, 0.5)
  ColoredPointSet X =
      ColoredPointSet({0, 0, 1, 1, 2, 2}, 2, {0, 0, 1}, 2, std::vector<double>{1, 1, 2});
  auto T = GroupRatios::dp(X, true);
  CHECK(T.tau(0) == doctest::Approx(0.5));
  CHECK(T.tau(1) == doctest::Approx(0.5));
}

TEST_CASE("dp rejects empty groups") {
  std::vector<double> coords = {0, 0, 1, 1};
  ColoredPointSet X(std::move(coords), 2, {0, 0}, 2);  // color 1 empty
  CHECK_THROWS_AS((void)GroupRatios::dp(X), Error);
}

TEST_CASE("f2 and finf on pinned examples") {
  ColoredPointSet X = mixed(10, 10);
  GroupRatios T = GroupRatios::from_doubles({0.5, 0.5});

  // ratios equal T -> 0
  std::vector<int> balanced = {0, 1, 10, 11};
  CHECK(f2(balanced, X, T) == doctest::Approx(0.0));
  CHECK(finf(balanced, X, T) == doctest::Approx(0.0));

  // (0.6, 0.4) vs (0.5, 0.5)
  std::vector<int> skew = {0, 1, 2, 3, 4, 5, 10, 11, 12, 13};
  CHECK(f2(skew, X, T) == doctest::Approx(0.01));
  CHECK(finf(skew, X, T) == doctest::Approx(0.1));

  // (1.0, 0.0) vs (0.5, 0.5)
  std::vector<int> allred = {0, 1, 2, 3};
  CHECK(f2(allred, X, T) == doctest::Approx(0.25));

  CHECK_THROWS_AS((void)f2({}, X, T), Error);
  CHECK_THROWS_AS((void)finf({}, X, T), Error);
}

TEST_CASE("finf three-color example") {
  // subset (0.5, 0.3, 0.2) vs T=(0.3, 0.3, 0.4) -> max(0.2, 0, 0.2) = 0.2
  std::vector<double> coords;
  std::vector<int> colors;
  for (int i = 0; i < 10; ++i) {
    coords.push_back(i);
    coords.push_back(0);
    colors.push_back(i < 5 ? 0 : i < 8 ? 1 : 2);
  }
  ColoredPointSet X(std::move(coords), 2, std::move(colors), 3);
  GroupRatios T = GroupRatios::from_doubles({0.3, 0.3, 0.4});
  std::vector<int> all(10);
  for (int i = 0; i < 10; ++i) all[i] = i;
  CHECK(finf(all, X, T) == doctest::Approx(0.2));
}

TEST_CASE("metric properties on random subsets") {
  SplitMix64 rng(99);
  ColoredPointSet X = gen_points(120, 2, 3, {0.5, 0.25, 0.25}, 42);
  GroupRatios T = GroupRatios::dp(X);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> subset;
    for (int i = 0; i < X.size(); ++i)
      if (rng.uniform01() < 0.3) subset.push_back(i);
    if (subset.empty()) subset.push_back(static_cast<int>(rng.below(X.size())));
    double a = f2(subset, X, T);
    double b = finf(subset, X, T);
    CHECK(a >= 0.0);
    CHECK(a <= 1.0);
    CHECK(b >= 0.0);
    CHECK(b <= 1.0);
    CHECK(a <= b * b + 1e-12);
    CHECK((a == 0.0) == (b == 0.0));
  }
}

TEST_CASE("ratio validation") {
  CHECK_THROWS_AS((void)GroupRatios::from_doubles({0.5, 0.6}), Error);
  CHECK_THROWS_AS((void)GroupRatios::from_doubles({1.0, 0.0}), Error);  // zero ratio rejected
  CHECK_THROWS_AS((void)GroupRatios::from_doubles({-0.5, 1.5}), Error);
  CHECK_NOTHROW((void)GroupRatios::from_doubles({1.0}));
}

TEST_CASE("ratio parsing") {
  GroupRatios a = GroupRatios::parse("0.5,0.3,0.2");
  CHECK(a.k() == 3);
  CHECK_FALSE(a.exact());

  GroupRatios b = GroupRatios::parse("1/2,1/3,1/6");
  CHECK(b.exact());
  CHECK(b.tau(1) == doctest::Approx(1.0 / 3.0));
  CHECK(b.integral_at(6));
  CHECK_FALSE(b.integral_at(4));
  CHECK(b.counts_at(12) == std::vector<std::int64_t>{6, 4, 2});

  ColoredPointSet X = mixed(6, 2);
  GroupRatios c = GroupRatios::parse("dp", &X);
  CHECK(c.tau(0) == doctest::Approx(0.75));
  CHECK(c.exact());
  CHECK(c.integral_at(4));
  CHECK_FALSE(c.integral_at(3));
}
