#include "fairnet/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "fairnet/rng.hpp"

namespace fairnet {

namespace {

// ceil with a guard against representation noise at exact integers
long long ceil_int(double x) { return static_cast<long long>(std::ceil(x - 1e-9)); }

std::vector<int> dedup_sorted(std::vector<int> draws) {
  std::sort(draws.begin(), draws.end());
  draws.erase(std::unique(draws.begin(), draws.end()), draws.end());
  return draws;
}

std::vector<int> uniform_draws(const ColoredPointSet& X, std::uint64_t seed, long long count) {
  SplitMix64 rng(seed);
  std::vector<int> draws;
  draws.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i)
    draws.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(X.size()))));
  return draws;
}

std::vector<int> weighted_draws(const ColoredPointSet& X, std::uint64_t seed, long long count) {
  const std::vector<double>& w = X.weights();
  std::vector<double> cum(w.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    acc += w[i];
    cum[i] = acc;
  }
  if (std::abs(acc - 1.0) > 1e-9)
    fail(ErrorCode::UnnormalizedWeights, "weights must sum to 1 for weighted sampling");
  SplitMix64 rng(seed);
  std::vector<int> draws;
  draws.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) {
    double u = rng.uniform01() * acc;
    auto it = std::lower_bound(cum.begin(), cum.end(), u);
    if (it == cum.end()) --it;
    draws.push_back(static_cast<int>(it - cum.begin()));
  }
  return draws;
}

// Shared FMC core: draws (already taken) are topped up / trimmed per color so
// that color l ends with exactly targets[l] distinct points.
FmcOutput fmc_finalize(const ColoredPointSet& X, const GroupRatios& T, long long lambda, double v,
                       std::vector<int> draws) {
  FmcOutput out;
  out.lambda = lambda;
  out.v = v;
  int k = T.k();

  out.targets.resize(k);
  std::vector<int> counts = X.color_counts();
  for (int l = 0; l < k; ++l) {
    out.targets[l] = ceil_int((1.0 + v) * T.tau(l) * static_cast<double>(lambda));
    if (out.targets[l] < 1) out.targets[l] = 1;
    if (out.targets[l] > counts[l])
      fail(ErrorCode::InsufficientColorPoints,
           "color lacks distinct points to reach its fair target", l);
    if (T.tau(l) * static_cast<double>(lambda) < 1.0) out.small_ratio_warning = true;
  }

  std::vector<int> sample = dedup_sorted(std::move(draws));

  // Per-color membership of the sample, in index order.
  std::vector<std::vector<int>> by_color(k);
  for (int i : sample) by_color[X.color(i)].push_back(i);

  std::vector<char> chosen(X.size(), 0);
  for (int l = 0; l < k; ++l) {
    auto& members = by_color[l];
    long long want = out.targets[l];
    if (static_cast<long long>(members.size()) > want) {
      // overshoot beyond the fair target: drop highest-index sampled points
      members.resize(static_cast<std::size_t>(want));
    }
    for (int i : members) chosen[i] = 1;
    long long have = static_cast<long long>(members.size());
    if (have < want) {
      // top-up: lowest-index unused points of this color
      for (int i = 0; i < X.size() && have < want; ++i) {
        if (X.color(i) == l && !chosen[i]) {
          chosen[i] = 1;
          ++have;
        }
      }
    }
  }

  for (int i = 0; i < X.size(); ++i)
    if (chosen[i]) out.indices.push_back(i);
  return out;
}

void check_dp_mode(const ColoredPointSet& X, const GroupRatios& T, bool use_weights) {
  GroupRatios dp = GroupRatios::dp(X, use_weights);
  if (dp.k() != T.k()) fail(ErrorCode::InvalidRatios, "ratio count differs from k");
  for (int l = 0; l < T.k(); ++l) {
    if (std::abs(dp.tau(l) - T.tau(l)) > (use_weights ? 1e-7 : 1e-9))
      fail(ErrorCode::InvalidRatios,
           use_weights ? "ratios must match per-color weight sums"
                       : "plain FMC supports DP ratios only",
           l);
  }
}

}  // namespace

void validate_params(const SamplingParams& p) {
  if (!(p.eps > 0.0 && p.eps < 1.0)) fail(ErrorCode::InvalidEpsilon, "eps must be in (0,1)");
  if (!(p.phi > 0.0 && p.phi < 1.0)) fail(ErrorCode::BadParams, "phi must be in (0,1)");
  if (p.vc_dim < 1) fail(ErrorCode::BadParams, "vc_dim must be >= 1");
  if (!(p.c0_sample > 0.0)) fail(ErrorCode::BadParams, "c0_sample must be positive");
}

long long epsnet_sample_size(const SamplingParams& p) {
  validate_params(p);
  double a = (4.0 / p.eps) * std::log(4.0 / p.phi);
  double b = (8.0 * p.vc_dim / p.eps) * std::log(16.0 / p.eps);
  return ceil_int(std::max(a, b));
}

long long epssample_sample_size(const SamplingParams& p) {
  validate_params(p);
  double ratio = static_cast<double>(p.vc_dim) / p.eps;
  double first = ratio <= 1.0 ? 0.0 : p.vc_dim * std::log(ratio);
  double gamma = (p.c0_sample / (p.eps * p.eps)) * (first + std::log(1.0 / p.phi));
  return ceil_int(gamma);
}

std::vector<int> epsnet_sampling(const ColoredPointSet& X, const SamplingParams& p) {
  if (X.size() == 0) fail(ErrorCode::EmptyGroup, "point set is empty");
  return dedup_sorted(uniform_draws(X, p.seed, epsnet_sample_size(p)));
}

std::vector<int> epssample_sampling(const ColoredPointSet& X, const SamplingParams& p) {
  if (X.size() == 0) fail(ErrorCode::EmptyGroup, "point set is empty");
  return dedup_sorted(uniform_draws(X, p.seed, epssample_sample_size(p)));
}

std::vector<int> weighted_epsnet_sampling(const ColoredPointSet& X, const SamplingParams& p) {
  if (X.size() == 0) fail(ErrorCode::EmptyGroup, "point set is empty");
  return dedup_sorted(weighted_draws(X, p.seed, epsnet_sample_size(p)));
}

FmcOutput fmc_fair_epsnet(const ColoredPointSet& X, const SamplingParams& p,
                          const GroupRatios& T) {
  if (X.size() == 0) fail(ErrorCode::EmptyGroup, "point set is empty");
  check_dp_mode(X, T, false);
  SamplingParams half = p;
  half.phi = p.phi / 2.0;  // sample failure budget phi/2, top-up budget phi/2
  long long lambda = epsnet_sample_size(half);
  double v = 2.0 * std::log(2.0 * T.k() / p.phi);
  return fmc_finalize(X, T, lambda, v, uniform_draws(X, p.seed, lambda));
}

FmcOutput fmc_weighted(const ColoredPointSet& X, const SamplingParams& p, const GroupRatios& T) {
  if (X.size() == 0) fail(ErrorCode::EmptyGroup, "point set is empty");
  if (!X.has_weights()) fail(ErrorCode::UnnormalizedWeights, "weighted FMC needs point weights");
  if (std::abs(X.total_weight() - 1.0) > 1e-9)
    fail(ErrorCode::UnnormalizedWeights, "weights must be normalized to sum 1");
  check_dp_mode(X, T, true);
  SamplingParams half = p;
  half.phi = p.phi / 2.0;
  long long lambda = epsnet_sample_size(half);
  double v = 2.0 * std::log(2.0 * T.k() / p.phi);
  return fmc_finalize(X, T, lambda, v, weighted_draws(X, p.seed, lambda));
}

FmcOutput fmc_fair_epssample(const ColoredPointSet& X, const SamplingParams& p,
                             const GroupRatios& T) {
  if (X.size() == 0) fail(ErrorCode::EmptyGroup, "point set is empty");
  check_dp_mode(X, T, false);
  SamplingParams half = p;
  half.phi = p.phi / 2.0;
  long long gamma = epssample_sample_size(half);
  double v = 2.0 * std::log(2.0 * T.k() / p.phi);
  return fmc_finalize(X, T, gamma, v, uniform_draws(X, p.seed, gamma));
}

}  // namespace fairnet
