#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fairnet/geometry.hpp"

namespace fairnet {

struct LoadedPoints {
  ColoredPointSet points;
  std::vector<std::string> color_names;  // dense id -> label, first-appearance order
};

// CSV with header x0,...,x{d-1},color[,weight]; color labels are mapped to
// dense ids in first-appearance order. Throws ParseError with the line number.
LoadedPoints load_points_csv(const std::string& path);
LoadedPoints read_points_csv(std::istream& in);
void save_points_csv(const std::string& path, const ColoredPointSet& X,
                     const std::vector<std::string>& color_names = {});

// Ranges file: JSON lines, one object per range.
RangeFamily load_ranges_jsonl(const std::string& path);
RangeFamily read_ranges_jsonl(std::istream& in);
void save_ranges_jsonl(const std::string& path, const RangeFamily& fam);
std::string range_to_json(const Range& r);

struct RunReport {
  std::string algo;
  std::string params_json = "{}";  // algorithm parameters, JSON object
  std::vector<int> output_indices;
  int size = 0;
  double f2 = 0.0;
  double finf = 0.0;
  bool valid = false;
  double runtime_ms = 0.0;
  std::uint64_t seed = 0;

  std::string to_json() const;
};

void save_report(const RunReport& report, const std::string& path);

}  // namespace fairnet
