#pragma once

#include <vector>

#include "fairnet/fairness.hpp"
#include "fairnet/incidence.hpp"

namespace fairnet {

// Ground-truth verification. Everything here is definitional or exhaustive
// and deliberately independent of the construction modules.

struct NetCheck {
  bool ok = true;
  int violating_range = -1;  // first heavy range missed, or -1
};

// True iff every heavy range (cardinality >= eps*n, or weight sum >= eps when
// use_weights) intersects S.
NetCheck check_epsnet(const IncidenceMatrix& inc, double eps, const std::vector<int>& S,
                      bool use_weights = false);

struct SampleCheck {
  bool ok = true;
  double max_deviation = 0.0;
  int worst_range = -1;
};

// True iff max_R | |A∩R|/|A| - |R|/n | <= eps. Also reports the deviation.
SampleCheck check_epssample(const IncidenceMatrix& inc, double eps, const std::vector<int>& A);

struct HittingCheck {
  bool ok = true;
  std::vector<int> unhit;
};

// True iff every range row intersects S.
HittingCheck check_hitting(const IncidenceMatrix& inc, const std::vector<int>& S);

struct BruteHittingResult {
  bool feasible = false;
  int size = -1;
  std::vector<int> witness;
};

// Exact minimum fair hitting set by subset enumeration: smallest S hitting
// every row with |S|*tau_l integral and per-color counts matched exactly.
// Guarded to n <= 20.
BruteHittingResult brute_min_fair_hitting_set(const IncidenceMatrix& inc,
                                              const ColoredPointSet& X, const GroupRatios& T);

// Exact minimum, over all colorings compatible with the matching, of the
// largest |signed row sum|. Matching pairs are column indices of `inc`.
// Guarded to 24 pairs.
int brute_min_discrepancy(const IncidenceMatrix& inc,
                          const std::vector<std::pair<int, int>>& pairs);

}  // namespace fairnet
