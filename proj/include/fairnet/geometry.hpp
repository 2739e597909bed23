#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fairnet/error.hpp"

namespace fairnet {

// Points in R^d with a group label each and optional positive weights.
// Immutable after construction; all invariants checked up front.
class ColoredPointSet {
 public:
  ColoredPointSet() : dim_(0), k_(0) {}
  ColoredPointSet(std::vector<double> coords, int dim, std::vector<int> colors, int k,
                  std::optional<std::vector<double>> weights = std::nullopt);

  int size() const { return static_cast<int>(colors_.size()); }
  int dim() const { return dim_; }
  int num_colors() const { return k_; }

  std::span<const double> point(int i) const {
    return {coords_.data() + static_cast<std::size_t>(i) * dim_, static_cast<std::size_t>(dim_)};
  }
  int color(int i) const { return colors_[i]; }
  const std::vector<int>& colors() const { return colors_; }

  bool has_weights() const { return weights_.has_value(); }
  double weight(int i) const { return weights_ ? (*weights_)[i] : 1.0; }
  const std::vector<double>& weights() const;

  // Per-color cardinalities, length k.
  std::vector<int> color_counts() const;
  // Per-color weight sums after dividing by the total, so they sum to 1.
  std::vector<double> normalized_color_weights() const;
  double total_weight() const;

  // Copy with weights replaced (same geometry/colors).
  ColoredPointSet with_weights(std::vector<double> w) const;
  // Copy with weights divided by their total.
  ColoredPointSet normalized() const;

 private:
  std::vector<double> coords_;  // row-major, size() * dim_
  int dim_;
  std::vector<int> colors_;
  int k_;
  std::optional<std::vector<double>> weights_;
};

struct Rect {
  std::vector<double> lo, hi;
};
struct Halfspace {
  std::vector<double> normal;
  double offset = 0.0;
};
struct Ball {
  std::vector<double> center;
  double radius = 0.0;
};
struct Explicit {
  std::vector<int> members;  // strictly increasing
};

// One geometric range. Membership is boundary-inclusive for every variant.
struct Range {
  std::variant<Rect, Halfspace, Ball, Explicit> shape;

  bool is_explicit() const { return std::holds_alternative<Explicit>(shape); }
  std::string type_name() const;
};

struct RangeFamily {
  std::vector<Range> ranges;

  int count() const { return static_cast<int>(ranges.size()); }
};

// Checks structural invariants (dimensions, lo<=hi, member bounds) against a
// point set of dimension `dim` with `n` points. Throws on violation.
void validate_range(const Range& r, int dim, int n);
void validate_family(const RangeFamily& fam, int dim, int n);

// Geometric membership test. Explicit ranges carry index sets, not geometry,
// so they are rejected here; use the indexed overload instead.
bool contains(const Range& r, std::span<const double> x);

// Membership of point i of X, handling all four variants.
bool contains(const Range& r, const ColoredPointSet& X, int i);

}  // namespace fairnet
