#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fairnet/fairness.hpp"
#include "fairnet/incidence.hpp"

namespace fairnet {

// A perfect pairing of a working set, in local positions 0..|Y|-1.
struct Matching {
  std::vector<std::pair<int, int>> pairs;
};

// +1/-1 labels over the working set, compatible with a matching
// (the two endpoints of every pair get opposite signs).
struct SignColoring {
  std::vector<std::int8_t> signs;
};

enum class MatchPolicy {
  Fair,       // pair only same-colored points (exact ratio preservation)
  IndexOrder  // arbitrary pairing in index order (unfair baseline)
};

struct DiscrepancyParams {
  double eps = 0.1;
  int vc_dim = 1;
  double c0_net = 1.0;
  std::optional<int> leaf_exponent;  // FSM block size 2^p; default derived
  MatchPolicy policy = MatchPolicy::Fair;
};

// Pairs the working set monochromatically, lowest index first within each
// color. Every color present must have an even count.
Matching fair_matching(const std::vector<int>& working, const ColoredPointSet& X);

// Arbitrary pairing: consecutive positions in index order. |working| even.
Matching index_matching(const std::vector<int>& working);

// Deterministic halving by conditional expectations. `restricted` holds the
// distinct nonempty ranges induced on the working set (columns = local
// positions). Guarantees max_R |signed sum| <= sqrt(2*|Y|*ln(4*m')).
SignColoring halving(const IncidenceMatrix& restricted, const Matching& matching, int n_local);

struct DiscOutput {
  std::vector<int> indices;   // sorted point indices
  long long target_size = 0;  // configured s* (after clamps)
  int iterations = 0;         // halvings performed by the main loop
  bool returned_whole = false;
  bool total_not_pow2 = false;
  std::vector<int> intermediate;  // FSM: the eps/2-sample X-hat (empty otherwise)
};

// Halving target s*: the power of two nearest to c0*(d/eps)*ln(d/eps), with
// ln clamped to >= 1 and s* clamped to [next_pow2(k), n].
long long epsnet_target_size(long long n, const DiscrepancyParams& dp, int k);

// FSM loop exit threshold c0*(4d/eps^2)*ln(2d/eps), ln clamped to >= 1.
double epssample_threshold(const DiscrepancyParams& dp);

// Iterated fair-matching + halving until the working set reaches s*.
// Requires every |X_c| (and, for exact agreement with the configured target,
// n itself) to be a power of two.
DiscOutput disc_fair_epsnet(const ColoredPointSet& X, const IncidenceMatrix& inc,
                            const DiscrepancyParams& dp);

// Sketch-and-merge: monochromatic leaf blocks of size 2^p, bottom-up
// merge+halve to the root, extra halvings down to the eps/2-sample
// threshold, then the plain discrepancy net at eps/2 on the intermediate.
DiscOutput fsm_fair_epsnet(const ColoredPointSet& X, const IncidenceMatrix& inc,
                           const DiscrepancyParams& dp);

// The sketch-and-merge intermediate on its own: a fair eps/2-sample of X
// (reported as an eps-sample with the slack spent on the halving loop).
DiscOutput disc_fair_epssample(const ColoredPointSet& X, const IncidenceMatrix& inc,
                               const DiscrepancyParams& dp);

// Default FSM leaf exponent for this instance (exposed for reporting).
int fsm_default_leaf_exponent(const ColoredPointSet& X, const DiscrepancyParams& dp);

}  // namespace fairnet
