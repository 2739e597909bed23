#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fairnet/geometry.hpp"

namespace fairnet {

// Target group ratios tau_1..tau_k: each in (0,1], summing to 1. When parsed
// from fractions ("1/2,1/3,1/6") the exact rational forms are kept so that
// integrality checks (|S|*tau integral) can be exact.
class GroupRatios {
 public:
  static GroupRatios from_doubles(std::vector<double> taus);
  static GroupRatios from_fractions(std::vector<std::pair<std::int64_t, std::int64_t>> fracs);

  // DP ratios: tau_l = |X_c|/|X|, or normalized per-color weight sums.
  static GroupRatios dp(const ColoredPointSet& X, bool use_weights = false);

  // CLI syntax: "dp" | "0.5,0.3,0.2" | "1/2,1/3,1/6". "dp" needs X.
  static GroupRatios parse(const std::string& text, const ColoredPointSet* X = nullptr,
                           bool use_weights = false);

  int k() const { return static_cast<int>(taus_.size()); }
  double tau(int l) const { return taus_[l]; }
  const std::vector<double>& taus() const { return taus_; }

  bool exact() const { return !fracs_.empty(); }
  // True when s*tau_l is an integer for every l (exact when rational forms
  // are available, else within 1e-9*s).
  bool integral_at(std::int64_t s) const;
  // Per-color counts s*tau_l rounded to nearest integer.
  std::vector<std::int64_t> counts_at(std::int64_t s) const;

 private:
  GroupRatios() = default;
  void validate() const;

  std::vector<double> taus_;
  std::vector<std::pair<std::int64_t, std::int64_t>> fracs_;  // empty unless exact
};

// Mean squared deviation of subset color ratios from T (Eq. style: 1/k * sum).
double f2(const std::vector<int>& subset, const ColoredPointSet& X, const GroupRatios& T);

// Max absolute deviation of subset color ratios from T.
double finf(const std::vector<int>& subset, const ColoredPointSet& X, const GroupRatios& T);

}  // namespace fairnet
