#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fairnet {

struct BenchRow {
  std::string stat;  // "run", "mean", "std"
  std::string algo;
  double eps = 0.0;
  int k = 0;
  int d = 0;
  std::string seed;  // empty for aggregate rows
  double size = 0.0;
  double f2 = 0.0;
  double finf = 0.0;
  int valid = 1;
  double runtime_ms = 0.0;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  bool all_valid = true;
};

// Runs the declarative sweep described by a JSON config (datasets or
// generator specs, algorithms, parameter grids, seed lists). One row per
// (algo, eps, seed), aggregate mean/std rows appended per (algo, eps).
BenchResult run_bench(const std::string& config_json);
BenchResult run_bench_file(const std::string& config_path);

// Deterministic CSV: fixed column order and %.17g numbers, rows sorted by
// (stat, algo, eps, seed).
void write_bench_csv(const BenchResult& result, std::ostream& os);

}  // namespace fairnet
