#include "fairnet/hitting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "fairnet/oracle.hpp"
#include "fairnet/rng.hpp"
#include "fairnet/sampling.hpp"

namespace fairnet {

FairLpInstance build_fair_lp(const IncidenceMatrix& inc, const ColoredPointSet& X,
                             const GroupRatios& T, bool fair) {
  int n = inc.cols();
  if (n != X.size()) fail(ErrorCode::DimensionMismatch, "incidence vs point set size");
  if (fair && T.k() != X.num_colors()) fail(ErrorCode::InvalidRatios, "ratio count differs from k");
  for (int r = 0; r < inc.rows(); ++r)
    if (inc.cardinality(r) == 0)
      fail(ErrorCode::EmptyRange, "empty range cannot be hit", r);

  FairLpInstance ins;
  ins.n = n;
  ins.m = inc.rows();
  ins.k = fair ? T.k() : 0;

  LinearProgram& lp = ins.lp;
  lp.num_vars = n + 1;  // w_0..w_{n-1}, eps_bar
  lp.objective.assign(n + 1, 0.0);
  lp.objective[n] = 1.0;
  lp.lower.assign(n + 1, 0.0);
  lp.upper.assign(n + 1, 1.0);
  lp.upper[n] = kInf;

  LinearProgram::Row total;
  total.sense = 'E';
  total.rhs = 1.0;
  total.coeffs.reserve(n);
  for (int i = 0; i < n; ++i) total.coeffs.emplace_back(i, 1.0);
  lp.rows.push_back(std::move(total));

  for (int r = 0; r < inc.rows(); ++r) {
    LinearProgram::Row row;
    row.sense = 'G';
    row.rhs = 0.0;
    for (int i : inc.row_members(r)) row.coeffs.emplace_back(i, 1.0);
    row.coeffs.emplace_back(n, -1.0);
    lp.rows.push_back(std::move(row));
  }

  if (fair) {
    std::vector<std::vector<int>> by_color(X.num_colors());
    for (int i = 0; i < n; ++i) by_color[X.color(i)].push_back(i);
    for (int l = 0; l < T.k(); ++l) {
      LinearProgram::Row row;
      row.sense = 'E';
      row.rhs = T.tau(l);
      for (int i : by_color[l]) row.coeffs.emplace_back(i, 1.0);
      lp.rows.push_back(std::move(row));
    }
  }
  return ins;
}

LpSolution solve_lp(const FairLpInstance& instance) {
  SimplexResult res = solve_simplex(instance.lp);
  LpSolution sol;
  sol.status = res.status;
  sol.iterations = res.iterations;
  sol.infeasible_row = res.infeasible_row;
  if (res.status == LpStatus::IterationLimit)
    fail(ErrorCode::NumericalBreakdown, "simplex hit its iteration limit");
  if (res.status != LpStatus::Optimal) return sol;
  sol.eps_bar = res.x[instance.eps_var()];
  sol.weights.assign(res.x.begin(), res.x.begin() + instance.n);
  double resid = lp_residual(instance, sol.weights, sol.eps_bar);
  if (resid > 1e-9)
    fail(ErrorCode::NumericalBreakdown, "LP certificate residual exceeds 1e-9");
  return sol;
}

double lp_residual(const FairLpInstance& instance, const std::vector<double>& weights,
                   double eps_bar) {
  const LinearProgram& lp = instance.lp;
  double worst = 0.0;
  for (int j = 0; j < instance.n; ++j) {
    worst = std::max(worst, lp.lower[j] - weights[j]);
    worst = std::max(worst, weights[j] - lp.upper[j]);
  }
  worst = std::max(worst, -eps_bar);
  for (const auto& row : lp.rows) {
    double acc = 0.0;
    for (auto [j, a] : row.coeffs)
      acc += a * (j == instance.eps_var() ? eps_bar : weights[j]);
    if (row.sense == 'E')
      worst = std::max(worst, std::abs(acc - row.rhs));
    else if (row.sense == 'G')
      worst = std::max(worst, row.rhs - acc);
    else
      worst = std::max(worst, acc - row.rhs);
  }
  return worst;
}

void write_lp_text(const FairLpInstance& instance, std::ostream& os) {
  const LinearProgram& lp = instance.lp;
  auto var_name = [&](int j) {
    return j == instance.eps_var() ? std::string("eps") : "w" + std::to_string(j);
  };
  os << "\\ fair hitting set relaxation: n=" << instance.n << " m=" << instance.m
     << " k=" << instance.k << "\n";
  os << "Maximize\n obj: eps\n";
  os << "Subject To\n";
  for (std::size_t r = 0; r < lp.rows.size(); ++r) {
    const auto& row = lp.rows[r];
    os << " c" << r << ":";
    for (auto [j, a] : row.coeffs) {
      if (a == 1.0)
        os << " + " << var_name(j);
      else if (a == -1.0)
        os << " - " << var_name(j);
      else
        os << (a >= 0 ? " + " : " - ") << std::abs(a) << " " << var_name(j);
    }
    os << (row.sense == 'E' ? " = " : row.sense == 'G' ? " >= " : " <= ") << row.rhs << "\n";
  }
  os << "Bounds\n";
  for (int j = 0; j < instance.n; ++j) os << " 0 <= " << var_name(j) << " <= 1\n";
  os << " eps >= 0\nEnd\n";
}

namespace {

HitSetOutput round_by_sampling(const ColoredPointSet& X, const IncidenceMatrix& inc,
                               const GroupRatios* T, const LpSolution& sol,
                               const HittingParams& hp) {
  if (sol.eps_bar < 1e-9)
    fail(ErrorCode::LpInfeasible, "LP optimum eps_bar is zero; no positive-weight cover exists");

  // LP weights become the sampling distribution. Zero weights are bumped to
  // a vanishing floor so the point set's positivity invariant holds; the
  // renormalized per-color sums stay within fmc_weighted's tolerance.
  std::vector<double> w = sol.weights;
  for (double& v : w) v = std::max(v, 1e-300);
  double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& v : w) v /= total;
  ColoredPointSet Xw = X.with_weights(w);

  SamplingParams sp;
  sp.eps = std::min(sol.eps_bar, 1.0 - 1e-12);
  sp.phi = hp.phi;
  sp.vc_dim = hp.vc_dim;

  int max_attempts = static_cast<int>(std::ceil(10.0 / hp.phi));
  HitSetOutput out;
  out.eps_bar = sol.eps_bar;
  out.lp_weights = sol.weights;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    sp.seed = SplitMix64::mix(hp.seed, static_cast<std::uint64_t>(attempt));
    std::vector<int> candidate;
    if (T != nullptr) {
      FmcOutput fmc = fmc_weighted(Xw, sp, *T);
      candidate = std::move(fmc.indices);
      out.lambda = fmc.lambda;
    } else {
      candidate = weighted_epsnet_sampling(Xw, sp);
      out.lambda = epsnet_sample_size(sp);
    }
    out.attempts = attempt + 1;
    if (check_hitting(inc, candidate).ok) {
      out.indices = std::move(candidate);
      return out;
    }
  }
  fail(ErrorCode::RetriesExhausted,
       "verified rounding failed every attempt; phi too small or instance pathological");
}

}  // namespace

HitSetOutput fglp(const ColoredPointSet& X, const IncidenceMatrix& inc, const GroupRatios& T,
                  const HittingParams& hp) {
  FairLpInstance ins = build_fair_lp(inc, X, T, true);
  LpSolution sol = solve_lp(ins);
  if (sol.status != LpStatus::Optimal)
    fail(ErrorCode::LpInfeasible, "fair hitting LP is infeasible", sol.infeasible_row);
  return round_by_sampling(X, inc, &T, sol, hp);
}

HitSetOutput glp(const ColoredPointSet& X, const IncidenceMatrix& inc, const HittingParams& hp) {
  GroupRatios dummy = GroupRatios::from_doubles({1.0});
  FairLpInstance ins = build_fair_lp(inc, X, dummy, false);
  LpSolution sol = solve_lp(ins);
  if (sol.status != LpStatus::Optimal)
    fail(ErrorCode::LpInfeasible, "hitting LP is infeasible", sol.infeasible_row);
  return round_by_sampling(X, inc, nullptr, sol, hp);
}

HitSetOutput cr_fair_epsnet(const ColoredPointSet& X, const IncidenceMatrix& inc, double eps,
                            const GroupRatios& T, const HittingParams& hp) {
  std::vector<int> heavy = heavy_ranges(inc, eps, false);
  if (heavy.empty()) {
    // vacuous net: smallest s with s*tau_l integral for every color
    std::vector<int> counts = X.color_counts();
    for (std::int64_t s = 1; s <= X.size(); ++s) {
      if (!T.integral_at(s)) continue;
      std::vector<std::int64_t> want = T.counts_at(s);
      bool fits = true;
      for (int l = 0; l < T.k(); ++l)
        if (want[l] > counts[l]) fits = false;
      if (!fits) continue;
      HitSetOutput out;
      std::vector<std::int64_t> taken(T.k(), 0);
      for (int i = 0; i < X.size(); ++i) {
        int c = X.color(i);
        if (taken[c] < want[c]) {
          out.indices.push_back(i);
          taken[c]++;
        }
      }
      return out;
    }
    fail(ErrorCode::InvalidRatios, "no T-respecting subset exists within |X|");
  }
  return fglp(X, select_rows(inc, heavy), T, hp);
}

CrFeasibilityReport cr_sample_feasibility(const ColoredPointSet& X, const IncidenceMatrix& inc,
                                          double eps, const GroupRatios& T) {
  if (!(eps > 0.0 && eps <= 1.0)) fail(ErrorCode::InvalidEpsilon, "eps must be in (0,1]");
  int n = X.size();
  int words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> color_mask(
      X.num_colors(), std::vector<std::uint64_t>(words, 0));
  for (int i = 0; i < n; ++i) color_mask[X.color(i)][i >> 6] |= 1ULL << (i & 63);

  CrFeasibilityReport report;
  std::vector<int> counts = X.color_counts();
  for (int r = 0; r < inc.rows(); ++r) {
    auto row = inc.row_words(r);
    for (int c = 0; c < X.num_colors(); ++c) {
      if (inc.cardinality(r) != counts[c]) continue;
      bool same = true;
      for (int w = 0; w < words && same; ++w)
        if (row[w] != color_mask[c][w]) same = false;
      if (!same) continue;
      // this range separates color c exactly: tau_c must sit within eps of
      // the ground ratio
      double ratio = static_cast<double>(counts[c]) / n;
      double lo = ratio - eps;
      double hi = ratio + eps;
      if (c < T.k() && (T.tau(c) < lo - 1e-12 || T.tau(c) > hi + 1e-12))
        report.violations.push_back({r, c, lo, hi, T.tau(c)});
    }
  }
  return report;
}

}  // namespace fairnet
