#pragma once

#include <cstdint>
#include <vector>

#include "fairnet/fairness.hpp"
#include "fairnet/geometry.hpp"

namespace fairnet {

struct SamplingParams {
  double eps = 0.1;
  double phi = 0.1;
  int vc_dim = 1;
  std::uint64_t seed = 0;
  double c0_sample = 1.0;  // epsilon-sample constant; heuristic default
};

void validate_params(const SamplingParams& p);

// Theorem-style net sample size:
// ceil(max((4/eps)*ln(4/phi), (8d/eps)*ln(16/eps))), natural logs.
long long epsnet_sample_size(const SamplingParams& p);

// Sample size for an eps-sample:
// ceil((c0/eps^2)*(d*ln(d/eps) + ln(1/phi))); the first term is clamped to 0
// when d/eps <= 1.
long long epssample_sample_size(const SamplingParams& p);

// Baseline unfair constructions: uniform draws with replacement,
// deduplicated into a sorted index set. Deterministic per seed.
std::vector<int> epsnet_sampling(const ColoredPointSet& X, const SamplingParams& p);
std::vector<int> epssample_sampling(const ColoredPointSet& X, const SamplingParams& p);

// Output of the fair Monte-Carlo constructions, with the quantities the
// size/fairness contracts are stated against.
struct FmcOutput {
  std::vector<int> indices;          // sorted
  long long lambda = 0;              // draws taken (phi/2 inflation applied)
  double v = 0.0;                    // 2*ln(2k/phi)
  std::vector<long long> targets;    // per-color exact counts
  bool small_ratio_warning = false;  // some tau_l*lambda < 1
};

// Fair Monte-Carlo net: lambda draws at phi/2, then per-color top-up /
// trim so color l holds exactly ceil((1+v)*tau_l*lambda) distinct points.
// DP mode only: T must equal dp_ratios(X).
FmcOutput fmc_fair_epsnet(const ColoredPointSet& X, const SamplingParams& p, const GroupRatios& T);

// Weighted variant: draws are taken with probability proportional to point
// weights (weights must be normalized to sum 1); T must match the per-color
// weight sums. Top-up rule is identical.
FmcOutput fmc_weighted(const ColoredPointSet& X, const SamplingParams& p, const GroupRatios& T);

// Fair Monte-Carlo eps-sample: gamma draws at phi/2 plus the same top-up
// scheme with lambda replaced by gamma.
FmcOutput fmc_fair_epssample(const ColoredPointSet& X, const SamplingParams& p,
                             const GroupRatios& T);

// Plain weighted eps-net sampling without any top-up (GLP rounding step).
std::vector<int> weighted_epsnet_sampling(const ColoredPointSet& X, const SamplingParams& p);

}  // namespace fairnet
