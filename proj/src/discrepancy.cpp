#include "fairnet/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fairnet {

namespace {

bool is_pow2(long long v) { return v > 0 && (v & (v - 1)) == 0; }

int log2_floor(long long v) {
  int p = 0;
  while ((1LL << (p + 1)) <= v) ++p;
  return p;
}

long long next_pow2(long long v) {
  long long p = 1;
  while (p < v) p <<= 1;
  return p;
}

double ln_clamped(double x) { return std::max(1.0, std::log(x)); }

// exponent of the power of two nearest to x in log space (ties upward)
int round_pow2_exponent(double x) {
  if (x <= 1.0) return 0;
  double e = std::log2(x);
  return static_cast<int>(std::floor(e + 0.5 + 1e-12));
}

void check_color_powers(const ColoredPointSet& X) {
  std::vector<int> counts = X.color_counts();
  for (std::size_t c = 0; c < counts.size(); ++c)
    if (!is_pow2(counts[c]))
      fail(ErrorCode::NotPowerOfTwo, "per-color cardinality must be a power of two",
           static_cast<long long>(c));
}

int min_color_exponent(const ColoredPointSet& X) {
  std::vector<int> counts = X.color_counts();
  int best = 62;
  for (int c : counts)
    if (c > 0) best = std::min(best, log2_floor(c));
  return best;
}

// One fair-matching (or index-matching) + halving step on the working set.
// Ranges are re-induced and deduplicated on the current set each time.
std::vector<int> halve_once(const std::vector<int>& working, const ColoredPointSet& X,
                            const IncidenceMatrix& inc, MatchPolicy policy) {
  Matching pi = policy == MatchPolicy::Fair ? fair_matching(working, X) : index_matching(working);
  IncidenceMatrix induced = restrict_to(inc, working);
  SignColoring kappa = halving(induced, pi, static_cast<int>(working.size()));
  std::vector<int> survivors;
  survivors.reserve(working.size() / 2);
  for (std::size_t i = 0; i < working.size(); ++i)
    if (kappa.signs[i] > 0) survivors.push_back(working[i]);
  return survivors;
}

}  // namespace

Matching fair_matching(const std::vector<int>& working, const ColoredPointSet& X) {
  Matching out;
  out.pairs.reserve(working.size() / 2);
  std::vector<int> pending(X.num_colors(), -1);
  for (std::size_t pos = 0; pos < working.size(); ++pos) {
    int c = X.color(working[pos]);
    if (pending[c] < 0) {
      pending[c] = static_cast<int>(pos);
    } else {
      out.pairs.emplace_back(pending[c], static_cast<int>(pos));
      pending[c] = -1;
    }
  }
  for (std::size_t c = 0; c < pending.size(); ++c)
    if (pending[c] >= 0)
      fail(ErrorCode::OddColorCount, "fair matching needs an even count per color",
           static_cast<long long>(c));
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

Matching index_matching(const std::vector<int>& working) {
  if (working.size() % 2 != 0)
    fail(ErrorCode::OddColorCount, "matching needs an even working set");
  Matching out;
  out.pairs.reserve(working.size() / 2);
  for (std::size_t pos = 0; pos + 1 < working.size(); pos += 2)
    out.pairs.emplace_back(static_cast<int>(pos), static_cast<int>(pos + 1));
  return out;
}

SignColoring halving(const IncidenceMatrix& restricted, const Matching& matching, int n_local) {
  SignColoring kappa;
  kappa.signs.assign(n_local, 0);
  int m = restricted.rows();
  int npairs = static_cast<int>(matching.pairs.size());

  if (m == 0) {
    // no ranges: any compatible coloring works; +1 to the lower endpoint
    for (auto [a, b] : matching.pairs) {
      kappa.signs[a] = 1;
      kappa.signs[b] = -1;
    }
    return kappa;
  }

  double t = std::sqrt(2.0 * std::log(4.0 * m) / static_cast<double>(n_local));
  double cosh_t = std::cosh(t);
  std::vector<double> cosh_pow(npairs + 1, 1.0);
  for (int i = 1; i <= npairs; ++i) cosh_pow[i] = cosh_pow[i - 1] * cosh_t;

  // signed sum and remaining-straddling-pair count per range
  std::vector<double> signed_sum(m, 0.0);
  std::vector<int> remaining(m, 0);
  // straddle direction per (pair, range): +1 if only the first endpoint is
  // inside, -1 if only the second, 0 otherwise
  std::vector<std::vector<std::pair<int, int>>> straddle(npairs);
  for (int p = 0; p < npairs; ++p) {
    auto [a, b] = matching.pairs[p];
    for (int r = 0; r < m; ++r) {
      int in_a = restricted.get(r, a) ? 1 : 0;
      int in_b = restricted.get(r, b) ? 1 : 0;
      if (in_a != in_b) {
        straddle[p].emplace_back(r, in_a - in_b);
        remaining[r]++;
      }
    }
  }

  // pairs in index order; sign chosen to minimize the pessimistic estimator
  // sum_R cosh(t*(s_R + sigma*dir)) * cosh(t)^(remaining_R - 1)
  for (int p = 0; p < npairs; ++p) {
    double diff = 0.0;  // phi(+1) - phi(-1), up to a positive factor
    for (auto [r, dir] : straddle[p])
      diff += dir * std::sinh(t * signed_sum[r]) * cosh_pow[remaining[r] - 1];
    int sigma = diff <= 0.0 ? 1 : -1;
    auto [a, b] = matching.pairs[p];
    kappa.signs[a] = static_cast<std::int8_t>(sigma);
    kappa.signs[b] = static_cast<std::int8_t>(-sigma);
    for (auto [r, dir] : straddle[p]) {
      signed_sum[r] += sigma * dir;
      remaining[r]--;
    }
  }
  return kappa;
}

long long epsnet_target_size(long long n, const DiscrepancyParams& dp, int k) {
  double raw = dp.c0_net * (dp.vc_dim / dp.eps) * ln_clamped(dp.vc_dim / dp.eps);
  long long s = 1LL << round_pow2_exponent(raw);
  s = std::max(s, next_pow2(k));
  return std::min(s, std::max<long long>(n, 1));
}

double epssample_threshold(const DiscrepancyParams& dp) {
  return dp.c0_net * (4.0 * dp.vc_dim / (dp.eps * dp.eps)) * ln_clamped(2.0 * dp.vc_dim / dp.eps);
}

DiscOutput disc_fair_epsnet(const ColoredPointSet& X, const IncidenceMatrix& inc,
                            const DiscrepancyParams& dp) {
  if (!(dp.eps > 0.0 && dp.eps < 1.0)) fail(ErrorCode::InvalidEpsilon, "eps must be in (0,1)");
  if (dp.vc_dim < 1 || !(dp.c0_net > 0.0)) fail(ErrorCode::BadParams, "bad discrepancy params");
  long long n = X.size();
  if (n == 0) fail(ErrorCode::EmptyGroup, "point set is empty");

  DiscOutput out;
  out.total_not_pow2 = !is_pow2(n);
  int max_halvings;
  if (dp.policy == MatchPolicy::Fair) {
    check_color_powers(X);
    max_halvings = min_color_exponent(X);
  } else {
    max_halvings = 0;
    while (n % (1LL << (max_halvings + 1)) == 0) ++max_halvings;
  }

  long long target = epsnet_target_size(n, dp, dp.policy == MatchPolicy::Fair ? X.num_colors() : 1);
  if (target >= n) {
    out.indices.resize(n);
    std::iota(out.indices.begin(), out.indices.end(), 0);
    out.target_size = n;
    out.returned_whole = true;
    return out;
  }

  int U = std::min(log2_floor(n / target), max_halvings);
  out.target_size = n >> U;

  std::vector<int> working(n);
  std::iota(working.begin(), working.end(), 0);
  for (int i = 0; i < U; ++i) working = halve_once(working, X, inc, dp.policy);
  out.iterations = U;
  out.indices = std::move(working);
  out.returned_whole = (U == 0);
  return out;
}

int fsm_default_leaf_exponent(const ColoredPointSet& X, const DiscrepancyParams& dp) {
  long long n = X.size();
  int xi = log2_floor(n);
  int p_raw = 0;
  double threshold = epssample_threshold(dp);
  while ((1LL << p_raw) < threshold && p_raw < 62) ++p_raw;  // smallest pow2 >= threshold
  int lo = dp.policy == MatchPolicy::Fair ? xi - min_color_exponent(X) : 0;
  int hi = std::max(0, xi - 1);
  return std::clamp(p_raw, std::min(lo, hi), hi);
}

namespace {

struct FsmCore {
  std::vector<int> xhat;  // intermediate working set after the halving loop
  int halvings = 0;
};

// Partition tree plus extra halvings: everything of Algorithm-2 before the
// final net construction.
FsmCore fsm_sample_core(const ColoredPointSet& X, const IncidenceMatrix& inc,
                        const DiscrepancyParams& dp) {
  long long n = X.size();
  if (n == 0) fail(ErrorCode::EmptyGroup, "point set is empty");
  if (!(dp.eps > 0.0 && dp.eps < 1.0)) fail(ErrorCode::InvalidEpsilon, "eps must be in (0,1)");
  if (!is_pow2(n))
    fail(ErrorCode::NotPowerOfTwo, "sketch-and-merge needs |X| to be a power of two");
  bool fair = dp.policy == MatchPolicy::Fair;
  if (fair) check_color_powers(X);

  int xi = log2_floor(n);
  int p = dp.leaf_exponent.value_or(fsm_default_leaf_exponent(X, dp));
  if (p < 0 || p > xi) fail(ErrorCode::LeafSizeIncompatible, "leaf exponent out of range", p);
  long long block = 1LL << p;
  if (fair) {
    for (int c : X.color_counts())
      if (c % block != 0)
        fail(ErrorCode::LeafSizeIncompatible, "2^p must divide every color cardinality", p);
    if (p < xi - min_color_exponent(X))
      fail(ErrorCode::LeafSizeIncompatible,
           "leaf blocks too small: tree height would exceed the smallest color exponent", p);
  }

  // Leaves: monochromatic blocks of size 2^p, colors in decreasing-size
  // order so color segments stay aligned at every tree level.
  std::vector<int> order(X.num_colors());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> counts = X.color_counts();
  if (fair) {
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return counts[a] > counts[b]; });
  }
  std::vector<std::vector<int>> by_color(X.num_colors());
  for (int i = 0; i < X.size(); ++i) by_color[X.color(i)].push_back(i);

  std::vector<std::vector<int>> level;
  if (fair) {
    for (int c : order) {
      for (std::size_t start = 0; start < by_color[c].size(); start += block)
        level.emplace_back(by_color[c].begin() + start, by_color[c].begin() + start + block);
    }
  } else {
    for (long long start = 0; start < n; start += block) {
      std::vector<int> leaf(block);
      std::iota(leaf.begin(), leaf.end(), static_cast<int>(start));
      level.push_back(std::move(leaf));
    }
  }

  FsmCore core;
  // merge siblings, halve, repeat to the root
  while (level.size() > 1) {
    std::vector<std::vector<int>> next;
    next.reserve(level.size() / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      std::vector<int> merged;
      merged.reserve(level[i].size() + level[i + 1].size());
      std::merge(level[i].begin(), level[i].end(), level[i + 1].begin(), level[i + 1].end(),
                 std::back_inserter(merged));
      next.push_back(halve_once(merged, X, inc, dp.policy));
      core.halvings++;
    }
    level = std::move(next);
  }

  core.xhat = std::move(level.front());
  std::sort(core.xhat.begin(), core.xhat.end());

  double threshold = epssample_threshold(dp);
  while (static_cast<double>(core.xhat.size()) > threshold && core.xhat.size() > 1) {
    core.xhat = halve_once(core.xhat, X, inc, dp.policy);
    core.halvings++;
  }
  return core;
}

}  // namespace

DiscOutput fsm_fair_epsnet(const ColoredPointSet& X, const IncidenceMatrix& inc,
                           const DiscrepancyParams& dp) {
  FsmCore core = fsm_sample_core(X, inc, dp);

  // plain discrepancy net at eps/2 on the intermediate sample
  DiscrepancyParams half = dp;
  half.eps = dp.eps / 2.0;
  half.leaf_exponent.reset();

  long long ns = static_cast<long long>(core.xhat.size());
  long long target = epsnet_target_size(ns, half, dp.policy == MatchPolicy::Fair ? X.num_colors() : 1);

  DiscOutput out;
  out.intermediate = core.xhat;
  out.iterations = core.halvings;

  std::vector<int> working = core.xhat;
  if (target < ns) {
    int max_halvings;
    if (dp.policy == MatchPolicy::Fair) {
      std::vector<int> sub_counts(X.num_colors(), 0);
      for (int i : working) sub_counts[X.color(i)]++;
      max_halvings = 62;
      for (int c : sub_counts)
        if (c > 0) max_halvings = std::min(max_halvings, log2_floor(c));
    } else {
      max_halvings = 0;
      while (ns % (1LL << (max_halvings + 1)) == 0) ++max_halvings;
    }
    int U = std::min(log2_floor(ns / target), max_halvings);
    for (int i = 0; i < U; ++i) working = halve_once(working, X, inc, dp.policy);
    out.iterations += U;
  }
  out.target_size = static_cast<long long>(working.size());
  out.indices = std::move(working);
  return out;
}

DiscOutput disc_fair_epssample(const ColoredPointSet& X, const IncidenceMatrix& inc,
                               const DiscrepancyParams& dp) {
  FsmCore core = fsm_sample_core(X, inc, dp);
  DiscOutput out;
  out.indices = core.xhat;
  out.intermediate = core.xhat;
  out.iterations = core.halvings;
  out.target_size = static_cast<long long>(core.xhat.size());
  return out;
}

}  // namespace fairnet
