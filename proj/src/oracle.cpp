#include "fairnet/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

namespace fairnet {

namespace {

// membership mask of S as row-shaped words
std::vector<std::uint64_t> subset_words(int cols, const std::vector<int>& S) {
  std::vector<std::uint64_t> words((cols + 63) / 64, 0);
  for (int i : S) {
    if (i < 0 || i >= cols) fail(ErrorCode::IndexOutOfRange, "subset index out of range", i);
    words[i >> 6] |= 1ULL << (i & 63);
  }
  return words;
}

bool intersects(std::span<const std::uint64_t> row, const std::vector<std::uint64_t>& mask) {
  for (std::size_t w = 0; w < mask.size(); ++w)
    if (row[w] & mask[w]) return true;
  return false;
}

int intersection_count(std::span<const std::uint64_t> row, const std::vector<std::uint64_t>& mask) {
  int c = 0;
  for (std::size_t w = 0; w < mask.size(); ++w) c += std::popcount(row[w] & mask[w]);
  return c;
}

}  // namespace

NetCheck check_epsnet(const IncidenceMatrix& inc, double eps, const std::vector<int>& S,
                      bool use_weights) {
  if (!(eps > 0.0 && eps <= 1.0)) fail(ErrorCode::InvalidEpsilon, "eps must be in (0,1]");
  std::vector<std::uint64_t> mask = subset_words(inc.cols(), S);
  double threshold = eps * inc.cols();
  for (int r = 0; r < inc.rows(); ++r) {
    bool heavy;
    if (use_weights) {
      if (!inc.has_weight_sums())
        fail(ErrorCode::UnnormalizedWeights, "weighted check needs attached weight sums");
      heavy = inc.weight_sum(r) >= eps - 1e-12;
    } else {
      heavy = static_cast<double>(inc.cardinality(r)) >= threshold - 1e-9;
    }
    if (heavy && !intersects(inc.row_words(r), mask)) return {false, r};
  }
  return {true, -1};
}

SampleCheck check_epssample(const IncidenceMatrix& inc, double eps, const std::vector<int>& A) {
  if (A.empty()) fail(ErrorCode::EmptySubset, "eps-sample check needs a nonempty subset");
  std::vector<std::uint64_t> mask = subset_words(inc.cols(), A);
  double inv_a = 1.0 / static_cast<double>(A.size());
  double inv_n = 1.0 / static_cast<double>(inc.cols());
  SampleCheck out;
  for (int r = 0; r < inc.rows(); ++r) {
    double dev = std::abs(intersection_count(inc.row_words(r), mask) * inv_a -
                          inc.cardinality(r) * inv_n);
    if (dev > out.max_deviation) {
      out.max_deviation = dev;
      out.worst_range = r;
    }
  }
  out.ok = out.max_deviation <= eps + 1e-12;
  return out;
}

HittingCheck check_hitting(const IncidenceMatrix& inc, const std::vector<int>& S) {
  std::vector<std::uint64_t> mask = subset_words(inc.cols(), S);
  HittingCheck out;
  for (int r = 0; r < inc.rows(); ++r)
    if (!intersects(inc.row_words(r), mask)) out.unhit.push_back(r);
  out.ok = out.unhit.empty();
  return out;
}

BruteHittingResult brute_min_fair_hitting_set(const IncidenceMatrix& inc,
                                              const ColoredPointSet& X, const GroupRatios& T) {
  int n = inc.cols();
  if (n != X.size()) fail(ErrorCode::DimensionMismatch, "incidence vs point set size");
  if (n > 20) fail(ErrorCode::InstanceTooLarge, "brute-force hitting set guarded to n <= 20");
  int k = T.k();

  std::vector<std::uint64_t> range_masks(inc.rows(), 0);
  for (int r = 0; r < inc.rows(); ++r)
    for (int i : inc.row_members(r)) range_masks[r] |= 1ULL << i;
  std::vector<std::uint64_t> color_masks(k, 0);
  for (int i = 0; i < n; ++i) color_masks[X.color(i)] |= 1ULL << i;

  // sizes ascending; within a size, lexicographic combinations, so the first
  // hit is the canonical witness
  for (int s = 1; s <= n; ++s) {
    if (!T.integral_at(s)) continue;
    std::vector<std::int64_t> want = T.counts_at(s);
    bool possible = true;
    for (int l = 0; l < k; ++l)
      if (want[l] > std::popcount(color_masks[l])) possible = false;
    if (!possible) continue;

    std::vector<int> comb(s);
    for (int i = 0; i < s; ++i) comb[i] = i;
    while (true) {
      std::uint64_t mask = 0;
      for (int i : comb) mask |= 1ULL << i;
      bool fair = true;
      for (int l = 0; l < k && fair; ++l)
        if (std::popcount(mask & color_masks[l]) != want[l]) fair = false;
      if (fair) {
        bool hits = true;
        for (const std::uint64_t rm : range_masks)
          if (!(rm & mask)) {
            hits = false;
            break;
          }
        if (hits) return {true, s, comb};
      }
      // next combination
      int i = s - 1;
      while (i >= 0 && comb[i] == n - s + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return {false, -1, {}};
}

int brute_min_discrepancy(const IncidenceMatrix& inc,
                          const std::vector<std::pair<int, int>>& pairs) {
  int np = static_cast<int>(pairs.size());
  if (np > 24) fail(ErrorCode::InstanceTooLarge, "brute-force discrepancy guarded to 24 pairs");
  int m = inc.rows();

  // per-pair signed effect on each row: +1 if only the first endpoint is in
  // the row, -1 if only the second, 0 if both or neither
  std::vector<std::vector<int>> effect(np, std::vector<int>(m, 0));
  for (int p = 0; p < np; ++p) {
    auto [a, b] = pairs[p];
    for (int r = 0; r < m; ++r) {
      int in_a = inc.get(r, a) ? 1 : 0;
      int in_b = inc.get(r, b) ? 1 : 0;
      effect[p][r] = in_a - in_b;
    }
  }

  std::vector<int> sums(m, 0);
  // start: all pairs at sign +1 (first endpoint +1)
  for (int p = 0; p < np; ++p)
    for (int r = 0; r < m; ++r) sums[r] += effect[p][r];

  auto max_abs = [&]() {
    int best = 0;
    for (int r = 0; r < m; ++r) best = std::max(best, std::abs(sums[r]));
    return best;
  };

  int best = max_abs();
  // Gray-code walk over all 2^np sign choices, flipping one pair at a time
  std::uint64_t gray_prev = 0;
  for (std::uint64_t i = 1; i < (1ULL << np); ++i) {
    std::uint64_t gray = i ^ (i >> 1);
    int p = std::countr_zero(gray ^ gray_prev);
    gray_prev = gray;
    int flip_sign = (gray >> p) & 1 ? -2 : 2;  // +1 -> -1 subtracts 2x effect
    for (int r = 0; r < m; ++r) sums[r] += flip_sign * effect[p][r];
    best = std::min(best, max_abs());
    if (best == 0) return 0;
  }
  return best;
}

}  // namespace fairnet
