#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "fairnet/fairness.hpp"
#include "fairnet/incidence.hpp"
#include "fairnet/simplex.hpp"

namespace fairnet {

// LP of the fair hitting-set relaxation: variables w_0..w_{n-1} in [0,1]
// plus eps_bar >= 0 (index n); maximize eps_bar subject to sum w = 1, per
// range sum_{i in R} w_i >= eps_bar, per color sum_{i in X_c} w_i = tau_l.
struct FairLpInstance {
  LinearProgram lp;
  int n = 0;
  int m = 0;
  int k = 0;  // 0 for the unfair (GLP) instance

  int eps_var() const { return n; }
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double eps_bar = 0.0;
  std::vector<double> weights;
  long long iterations = 0;
  int infeasible_row = -1;
};

// Builds the instance; rejects empty ranges up front. Pass fair=false to
// omit the color constraints (the GLP baseline relaxation).
FairLpInstance build_fair_lp(const IncidenceMatrix& inc, const ColoredPointSet& X,
                             const GroupRatios& T, bool fair = true);

LpSolution solve_lp(const FairLpInstance& instance);

// Largest violation of the instance's constraints at (weights, eps_bar).
double lp_residual(const FairLpInstance& instance, const std::vector<double>& weights,
                   double eps_bar);

// CPLEX-style LP text format, for cross-checks against external solvers.
void write_lp_text(const FairLpInstance& instance, std::ostream& os);

struct HittingParams {
  double phi = 0.1;
  int vc_dim = 1;
  std::uint64_t seed = 0;
};

struct HitSetOutput {
  std::vector<int> indices;
  double eps_bar = 0.0;
  long long lambda = 0;
  int attempts = 0;
  std::vector<double> lp_weights;
};

// Fair geometric hitting set: solve the fair LP, then round by the weighted
// fair Monte-Carlo net at eps_bar. Draws are retried (seed-chained) until
// every range is hit, capped at ceil(10/phi) attempts.
HitSetOutput fglp(const ColoredPointSet& X, const IncidenceMatrix& inc, const GroupRatios& T,
                  const HittingParams& hp);

// Unfair baseline: LP without color constraints, plain weighted sampling.
HitSetOutput glp(const ColoredPointSet& X, const IncidenceMatrix& inc, const HittingParams& hp);

// Fair eps-net under custom ratios: FGLP restricted to the eps-heavy rows.
// With no heavy row, returns the smallest T-respecting set (lowest-index
// points per color).
HitSetOutput cr_fair_epsnet(const ColoredPointSet& X, const IncidenceMatrix& inc, double eps,
                            const GroupRatios& T, const HittingParams& hp);

struct CrBandViolation {
  int range = -1;
  int color = -1;
  double band_lo = 0.0;
  double band_hi = 0.0;
  double tau = 0.0;
};

struct CrFeasibilityReport {
  std::vector<CrBandViolation> violations;

  bool obstruction_found() const { return !violations.empty(); }
};

// Necessary-condition check for CR eps-samples: every range whose members
// are exactly one color class forces tau within |X_c|/n +- eps. Finding no
// violation is not a feasibility guarantee.
CrFeasibilityReport cr_sample_feasibility(const ColoredPointSet& X, const IncidenceMatrix& inc,
                                          double eps, const GroupRatios& T);

}  // namespace fairnet
