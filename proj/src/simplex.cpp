#include "fairnet/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fairnet/error.hpp"

namespace fairnet {

namespace {

enum class VarState : std::uint8_t { Basic, AtLower, AtUpper };

struct Solver {
  // columns: structurals [0, n), slacks [n, n+R), artificials [n+R, ...)
  int n_struct;
  int n_rows;
  int n_total;
  std::vector<std::vector<std::pair<int, double>>> cols;
  std::vector<double> lower, upper;
  std::vector<double> rhs;
  std::vector<double> cost;  // current phase, minimized
  std::vector<char> enterable;

  std::vector<int> basic;          // row -> var
  std::vector<int> basic_row;      // var -> row or -1
  std::vector<VarState> state;     // per var
  std::vector<double> xval;        // per var (basics mirrored from xb)
  std::vector<double> binv;        // dense R x R, row-major
  std::vector<double> xb;          // basic values

  const SimplexOptions& opts;
  long long iterations = 0;
  int since_refactor = 0;
  int stalled = 0;
  bool bland = false;
  int price_start = 0;

  explicit Solver(const SimplexOptions& o) : opts(o) {}

  double& bi(int r, int c) { return binv[static_cast<std::size_t>(r) * n_rows + c]; }

  double nonbasic_value(int j) const {
    return state[j] == VarState::AtUpper ? upper[j] : lower[j];
  }

  // xb = B^-1 (rhs - sum_{nonbasic j} A_j x_j)
  void recompute_xb() {
    std::vector<double> r = rhs;
    for (int j = 0; j < n_total; ++j) {
      if (state[j] == VarState::Basic) continue;
      double v = nonbasic_value(j);
      if (v == 0.0) continue;
      for (auto [row, a] : cols[j]) r[row] -= a * v;
    }
    for (int i = 0; i < n_rows; ++i) {
      double acc = 0.0;
      for (int c = 0; c < n_rows; ++c) acc += bi(i, c) * r[c];
      xb[i] = acc;
    }
    for (int i = 0; i < n_rows; ++i) xval[basic[i]] = xb[i];
  }

  // rebuild binv from the basis by Gauss-Jordan with partial pivoting
  bool refactor() {
    std::vector<double> mat(static_cast<std::size_t>(n_rows) * n_rows, 0.0);
    auto m = [&](int r, int c) -> double& { return mat[static_cast<std::size_t>(r) * n_rows + c]; };
    for (int c = 0; c < n_rows; ++c)
      for (auto [row, a] : cols[basic[c]]) m(row, c) = a;

    std::fill(binv.begin(), binv.end(), 0.0);
    for (int i = 0; i < n_rows; ++i) bi(i, i) = 1.0;

    for (int col = 0; col < n_rows; ++col) {
      int piv = col;
      double best = std::abs(m(col, col));
      for (int r = col + 1; r < n_rows; ++r) {
        if (std::abs(m(r, col)) > best) {
          best = std::abs(m(r, col));
          piv = r;
        }
      }
      if (best < 1e-12) return false;
      if (piv != col) {
        for (int c = 0; c < n_rows; ++c) {
          std::swap(m(piv, c), m(col, c));
          std::swap(bi(piv, c), bi(col, c));
        }
      }
      double inv = 1.0 / m(col, col);
      for (int c = 0; c < n_rows; ++c) {
        m(col, c) *= inv;
        bi(col, c) *= inv;
      }
      for (int r = 0; r < n_rows; ++r) {
        if (r == col) continue;
        double f = m(r, col);
        if (f == 0.0) continue;
        for (int c = 0; c < n_rows; ++c) {
          m(r, c) -= f * m(col, c);
          bi(r, c) -= f * bi(col, c);
        }
      }
    }
    since_refactor = 0;
    return true;
  }

  std::vector<double> dual_prices() const {
    std::vector<double> y(n_rows, 0.0);
    for (int r = 0; r < n_rows; ++r) {
      double cb = cost[basic[r]];
      if (cb == 0.0) continue;
      for (int c = 0; c < n_rows; ++c)
        y[c] += cb * binv[static_cast<std::size_t>(r) * n_rows + c];
    }
    return y;
  }

  double reduced_cost(int j, const std::vector<double>& y) const {
    double d = cost[j];
    for (auto [row, a] : cols[j]) d -= y[row] * a;
    return d;
  }

  bool eligible(int j, double d) const {
    if (state[j] == VarState::AtLower) return d < -opts.tol;
    return d > opts.tol;  // AtUpper
  }

  // entering variable, or -1 when optimal
  int price(const std::vector<double>& y) {
    if (bland) {
      for (int j = 0; j < n_total; ++j) {
        if (state[j] == VarState::Basic || !enterable[j] || lower[j] == upper[j]) continue;
        if (eligible(j, reduced_cost(j, y))) return j;
      }
      return -1;
    }
    // partial pricing: scan windows cyclically, take the best candidate in
    // the first window that has one
    int scanned = 0;
    int start = price_start;
    while (scanned < n_total) {
      int best = -1;
      double best_score = 0.0;
      int limit = std::min(n_total - scanned, opts.pricing_window);
      for (int t = 0; t < limit; ++t) {
        int j = (start + t) % n_total;
        if (state[j] == VarState::Basic || !enterable[j] || lower[j] == upper[j]) continue;
        double d = reduced_cost(j, y);
        if (eligible(j, d) && std::abs(d) > best_score) {
          best_score = std::abs(d);
          best = j;
        }
      }
      scanned += limit;
      start = (start + limit) % n_total;
      if (best >= 0) {
        price_start = start;
        return best;
      }
    }
    return -1;
  }

  enum class StepStatus { Ok, Optimal, Unbounded, Breakdown };

  StepStatus iterate() {
    std::vector<double> y = dual_prices();
    int e = price(y);
    if (e < 0) return StepStatus::Optimal;

    // direction w = B^-1 A_e
    std::vector<double> w(n_rows, 0.0);
    for (auto [row, a] : cols[e])
      for (int i = 0; i < n_rows; ++i) w[i] += bi(i, row) * a;

    double sigma = state[e] == VarState::AtLower ? 1.0 : -1.0;

    double t_best = kInf;
    int leave = -1;      // row index
    double leave_to = 0; // bound the leaving variable hits (0 lower, 1 upper)
    for (int i = 0; i < n_rows; ++i) {
      double delta = sigma * w[i];
      int bvar = basic[i];
      if (delta > opts.tol) {
        double room = xb[i] - lower[bvar];
        double t = room / delta;
        if (t < t_best - opts.tol ||
            (t < t_best + opts.tol && (leave < 0 || bvar < basic[leave]))) {
          t_best = std::max(t, 0.0);
          leave = i;
          leave_to = 0;
        }
      } else if (delta < -opts.tol) {
        if (upper[bvar] == kInf) continue;
        double room = upper[bvar] - xb[i];
        double t = room / (-delta);
        if (t < t_best - opts.tol ||
            (t < t_best + opts.tol && (leave < 0 || bvar < basic[leave]))) {
          t_best = std::max(t, 0.0);
          leave = i;
          leave_to = 1;
        }
      }
    }

    double span = upper[e] - lower[e];
    bool flip = span < t_best;
    if (flip) t_best = span;
    if (t_best == kInf) return StepStatus::Unbounded;

    // move basics
    for (int i = 0; i < n_rows; ++i) {
      xb[i] -= t_best * sigma * w[i];
      xval[basic[i]] = xb[i];
    }

    if (flip) {
      state[e] = state[e] == VarState::AtLower ? VarState::AtUpper : VarState::AtLower;
      xval[e] = nonbasic_value(e);
      stalled = 0;
      return StepStatus::Ok;
    }

    // pivot e in, basic[leave] out
    double piv = w[leave];
    if (std::abs(piv) < 1e-11) {
      if (!refactor()) return StepStatus::Breakdown;
      recompute_xb();
      return StepStatus::Ok;  // retry from refreshed state
    }
    int out_var = basic[leave];
    state[out_var] = leave_to == 0 ? VarState::AtLower : VarState::AtUpper;
    xval[out_var] = nonbasic_value(out_var);
    basic_row[out_var] = -1;

    double enter_val = nonbasic_value(e) + sigma * t_best;
    basic[leave] = e;
    basic_row[e] = leave;
    state[e] = VarState::Basic;
    xb[leave] = enter_val;
    xval[e] = enter_val;

    // binv <- E * binv
    double inv_piv = 1.0 / piv;
    for (int c = 0; c < n_rows; ++c) bi(leave, c) *= inv_piv;
    for (int i = 0; i < n_rows; ++i) {
      if (i == leave) continue;
      double f = w[i];
      if (f == 0.0) continue;
      for (int c = 0; c < n_rows; ++c) bi(i, c) -= f * bi(leave, c);
    }

    stalled = t_best <= opts.tol ? stalled + 1 : 0;
    if (stalled > 64) bland = true;
    else if (stalled == 0) bland = false;

    if (++since_refactor >= opts.refactor_every) {
      if (!refactor()) return StepStatus::Breakdown;
      recompute_xb();
    }
    return StepStatus::Ok;
  }

  // returns final status of the current phase
  LpStatus run_phase() {
    for (;;) {
      if (++iterations > opts.max_iterations) return LpStatus::IterationLimit;
      StepStatus st = iterate();
      if (st == StepStatus::Optimal) return LpStatus::Optimal;
      if (st == StepStatus::Unbounded) return LpStatus::Unbounded;
      if (st == StepStatus::Breakdown)
        fail(ErrorCode::NumericalBreakdown, "simplex basis became singular");
    }
  }
};

}  // namespace

SimplexResult solve_simplex(const LinearProgram& lp, const SimplexOptions& opts) {
  const int n = lp.num_vars;
  const int R = static_cast<int>(lp.rows.size());
  Solver s(opts);
  s.n_struct = n;
  s.n_rows = R;

  // structural columns
  s.cols.assign(n, {});
  for (int r = 0; r < R; ++r)
    for (auto [j, a] : lp.rows[r].coeffs) {
      if (j < 0 || j >= n) fail(ErrorCode::BadParams, "LP coefficient column out of range", j);
      if (a != 0.0) s.cols[j].emplace_back(r, a);
    }
  s.lower = lp.lower;
  s.upper = lp.upper;
  for (int j = 0; j < n; ++j) {
    if (s.lower[j] == -kInf && s.upper[j] == kInf)
      fail(ErrorCode::BadParams, "free variables are not supported", j);
    if (s.lower[j] > s.upper[j]) fail(ErrorCode::BadParams, "empty variable bound box", j);
  }

  // slack per row: L -> [0,inf), G -> (-inf,0], E -> [0,0]
  s.rhs.resize(R);
  for (int r = 0; r < R; ++r) {
    s.rhs[r] = lp.rows[r].rhs;
    s.cols.push_back({{r, 1.0}});
    switch (lp.rows[r].sense) {
      case 'L':
        s.lower.push_back(0.0);
        s.upper.push_back(kInf);
        break;
      case 'G':
        s.lower.push_back(-kInf);
        s.upper.push_back(0.0);
        break;
      case 'E':
        s.lower.push_back(0.0);
        s.upper.push_back(0.0);
        break;
      default:
        fail(ErrorCode::BadParams, "row sense must be L, G or E", r);
    }
  }

  // initial point: structurals at a finite bound, slacks clamped toward the
  // row residual; artificials absorb what is left
  int nt = n + R;
  s.state.assign(nt, VarState::AtLower);
  for (int j = 0; j < nt; ++j)
    if (s.lower[j] == -kInf) s.state[j] = VarState::AtUpper;

  std::vector<double> residual = s.rhs;
  for (int j = 0; j < nt; ++j) {
    double v = s.state[j] == VarState::AtUpper ? s.upper[j] : s.lower[j];
    if (v != 0.0)
      for (auto [row, a] : s.cols[j]) residual[row] -= a * v;
  }

  s.basic.assign(R, -1);
  std::vector<char> row_has_artificial(R, 0);
  for (int r = 0; r < R; ++r) {
    int slack = n + r;
    double v = s.state[slack] == VarState::AtUpper ? s.upper[slack] : s.lower[slack];
    double want = residual[r] + v;  // value the slack would need
    if (want >= s.lower[slack] - opts.tol && want <= s.upper[slack] + opts.tol) {
      s.basic[r] = slack;
    } else {
      // clamp slack to its closest bound and give the rest to an artificial
      double clamped = want;
      if (s.lower[slack] != -kInf) clamped = std::max(clamped, s.lower[slack]);
      if (s.upper[slack] != kInf) clamped = std::min(clamped, s.upper[slack]);
      double leftover = want - clamped;
      s.state[slack] = clamped == s.upper[slack] ? VarState::AtUpper : VarState::AtLower;
      s.cols.push_back({{r, leftover >= 0 ? 1.0 : -1.0}});
      s.lower.push_back(0.0);
      s.upper.push_back(kInf);
      s.basic[r] = static_cast<int>(s.cols.size()) - 1;
      row_has_artificial[r] = 1;
    }
  }
  s.n_total = static_cast<int>(s.cols.size());
  int n_art = s.n_total - nt;

  s.lower.resize(s.n_total);
  s.upper.resize(s.n_total);
  s.state.resize(s.n_total, VarState::Basic);
  for (int r = 0; r < R; ++r) s.state[s.basic[r]] = VarState::Basic;
  s.enterable.assign(s.n_total, 1);

  s.basic_row.assign(s.n_total, -1);
  for (int r = 0; r < R; ++r) s.basic_row[s.basic[r]] = r;

  s.xval.assign(s.n_total, 0.0);
  for (int j = 0; j < s.n_total; ++j)
    if (s.state[j] != VarState::Basic) s.xval[j] = s.nonbasic_value(j);
  s.binv.assign(static_cast<std::size_t>(R) * R, 0.0);
  s.xb.assign(R, 0.0);
  if (!s.refactor()) fail(ErrorCode::NumericalBreakdown, "initial basis is singular");
  s.recompute_xb();

  SimplexResult result;

  // ---- phase 1: drive artificial variables to zero
  if (n_art > 0) {
    s.cost.assign(s.n_total, 0.0);
    for (int j = nt; j < s.n_total; ++j) s.cost[j] = 1.0;
    LpStatus st = s.run_phase();
    if (st == LpStatus::IterationLimit) {
      result.status = LpStatus::IterationLimit;
      return result;
    }
    double infeas = 0.0;
    int worst_row = -1;
    double worst = 0.0;
    for (int j = nt; j < s.n_total; ++j) {
      double v = s.xval[j];
      infeas += v;
      if (v > worst) {
        worst = v;
        worst_row = s.cols[j][0].first;
      }
    }
    if (infeas > 1e-7) {
      result.status = LpStatus::Infeasible;
      result.infeasible_row = worst_row;
      result.iterations = s.iterations;
      return result;
    }
    // pin artificials at zero; basic ones may stay (redundant rows)
    for (int j = nt; j < s.n_total; ++j) {
      s.upper[j] = 0.0;
      s.enterable[j] = 0;
      if (s.state[j] != VarState::Basic) s.state[j] = VarState::AtLower;
    }
  }

  // ---- phase 2: minimize the negated (maximization) objective
  s.cost.assign(s.n_total, 0.0);
  for (int j = 0; j < n; ++j) s.cost[j] = -lp.objective[j];
  s.bland = false;
  s.stalled = 0;
  LpStatus st = s.run_phase();
  result.iterations = s.iterations;
  if (st == LpStatus::IterationLimit || st == LpStatus::Unbounded) {
    result.status = st;
    return result;
  }

  result.status = LpStatus::Optimal;
  result.x.assign(n, 0.0);
  for (int j = 0; j < n; ++j) result.x[j] = s.xval[j];
  // clean tiny bound violations from floating error
  for (int j = 0; j < n; ++j)
    result.x[j] = std::clamp(result.x[j], lp.lower[j], lp.upper[j]);
  double obj = 0.0;
  for (int j = 0; j < n; ++j) obj += lp.objective[j] * result.x[j];
  result.objective = obj;
  std::vector<double> y = s.dual_prices();
  result.duals.assign(R, 0.0);
  for (int r = 0; r < R; ++r) result.duals[r] = -y[r];  // back to max form
  return result;
}

}  // namespace fairnet
