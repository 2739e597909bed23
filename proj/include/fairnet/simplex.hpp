#pragma once

#include <limits>
#include <vector>

namespace fairnet {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Generic LP: maximize objective subject to row constraints and variable
// bounds. Rows hold sparse coefficient lists.
struct LinearProgram {
  struct Row {
    std::vector<std::pair<int, double>> coeffs;
    char sense = 'L';  // 'L' (<=), 'G' (>=), 'E' (=)
    double rhs = 0.0;
  };

  int num_vars = 0;
  std::vector<double> objective;  // maximized
  std::vector<double> lower;      // finite
  std::vector<double> upper;      // may be +inf
  std::vector<Row> rows;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct SimplexResult {
  LpStatus status = LpStatus::Infeasible;
  double objective = 0.0;
  std::vector<double> x;
  std::vector<double> duals;  // one per row, for the maximization form
  long long iterations = 0;
  int infeasible_row = -1;  // a row kept violated when status == Infeasible
};

struct SimplexOptions {
  double tol = 1e-9;
  long long max_iterations = 2'000'000;
  int refactor_every = 128;
  int pricing_window = 64;
};

// Bounded-variable revised simplex, two phases, dense basis inverse with
// eta updates and periodic refactorization. Partial pricing by default,
// smallest-index (Bland) selection once degeneracy stalls. Deterministic.
SimplexResult solve_simplex(const LinearProgram& lp, const SimplexOptions& opts = {});

}  // namespace fairnet
