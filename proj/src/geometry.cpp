#include "fairnet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fairnet {

ColoredPointSet::ColoredPointSet(std::vector<double> coords, int dim, std::vector<int> colors,
                                 int k, std::optional<std::vector<double>> weights)
    : coords_(std::move(coords)), dim_(dim), colors_(std::move(colors)), k_(k),
      weights_(std::move(weights)) {
  if (dim_ < 1) fail(ErrorCode::DimensionMismatch, "geometric dimension must be >= 1");
  if (coords_.size() != colors_.size() * static_cast<std::size_t>(dim_))
    fail(ErrorCode::DimensionMismatch, "coords length must equal n*dim");
  if (k_ < 1 && !colors_.empty()) fail(ErrorCode::BadParams, "k must be >= 1");
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (colors_[i] < 0 || colors_[i] >= k_)
      fail(ErrorCode::BadParams, "color id out of [0,k)", static_cast<long long>(i));
  }
  if (weights_) {
    if (weights_->size() != colors_.size())
      fail(ErrorCode::DimensionMismatch, "weights length must equal n");
    for (std::size_t i = 0; i < weights_->size(); ++i) {
      if (!((*weights_)[i] > 0.0))
        fail(ErrorCode::BadParams, "weights must be positive", static_cast<long long>(i));
    }
  }
}

const std::vector<double>& ColoredPointSet::weights() const {
  if (!weights_) fail(ErrorCode::UnnormalizedWeights, "point set carries no weights");
  return *weights_;
}

std::vector<int> ColoredPointSet::color_counts() const {
  std::vector<int> counts(k_, 0);
  for (int c : colors_) counts[c]++;
  return counts;
}

double ColoredPointSet::total_weight() const {
  if (!weights_) return static_cast<double>(size());
  return std::accumulate(weights_->begin(), weights_->end(), 0.0);
}

std::vector<double> ColoredPointSet::normalized_color_weights() const {
  std::vector<double> sums(k_, 0.0);
  double total = 0.0;
  for (int i = 0; i < size(); ++i) {
    sums[colors_[i]] += weight(i);
    total += weight(i);
  }
  if (total <= 0.0) fail(ErrorCode::UnnormalizedWeights, "total weight is zero");
  for (double& s : sums) s /= total;
  return sums;
}

ColoredPointSet ColoredPointSet::with_weights(std::vector<double> w) const {
  return ColoredPointSet(coords_, dim_, colors_, k_, std::move(w));
}

ColoredPointSet ColoredPointSet::normalized() const {
  if (!weights_) return *this;
  double total = total_weight();
  if (total <= 0.0) fail(ErrorCode::UnnormalizedWeights, "total weight is zero");
  std::vector<double> w = *weights_;
  for (double& x : w) x /= total;
  return ColoredPointSet(coords_, dim_, colors_, k_, std::move(w));
}

std::string Range::type_name() const {
  if (std::holds_alternative<Rect>(shape)) return "rect";
  if (std::holds_alternative<Halfspace>(shape)) return "halfspace";
  if (std::holds_alternative<Ball>(shape)) return "ball";
  return "explicit";
}

void validate_range(const Range& r, int dim, int n) {
  if (const auto* rc = std::get_if<Rect>(&r.shape)) {
    if (static_cast<int>(rc->lo.size()) != dim || static_cast<int>(rc->hi.size()) != dim)
      fail(ErrorCode::DimensionMismatch, "rect dimension mismatch");
    for (int i = 0; i < dim; ++i)
      if (!(rc->lo[i] <= rc->hi[i])) fail(ErrorCode::BadParams, "rect requires lo <= hi", i);
  } else if (const auto* hs = std::get_if<Halfspace>(&r.shape)) {
    if (static_cast<int>(hs->normal.size()) != dim)
      fail(ErrorCode::DimensionMismatch, "halfspace dimension mismatch");
    bool all_zero = std::all_of(hs->normal.begin(), hs->normal.end(),
                                [](double v) { return v == 0.0; });
    if (all_zero) fail(ErrorCode::BadParams, "halfspace normal must be nonzero");
  } else if (const auto* b = std::get_if<Ball>(&r.shape)) {
    if (static_cast<int>(b->center.size()) != dim)
      fail(ErrorCode::DimensionMismatch, "ball dimension mismatch");
    if (!(b->radius >= 0.0)) fail(ErrorCode::BadParams, "ball radius must be >= 0");
  } else {
    const auto& e = std::get<Explicit>(r.shape);
    int prev = -1;
    for (int idx : e.members) {
      if (idx <= prev) fail(ErrorCode::BadParams, "explicit members must be strictly increasing");
      if (idx < 0 || idx >= n) fail(ErrorCode::IndexOutOfRange, "explicit member out of range", idx);
      prev = idx;
    }
  }
}

void validate_family(const RangeFamily& fam, int dim, int n) {
  for (const Range& r : fam.ranges) validate_range(r, dim, n);
}

bool contains(const Range& r, std::span<const double> x) {
  if (const auto* rc = std::get_if<Rect>(&r.shape)) {
    if (rc->lo.size() != x.size()) fail(ErrorCode::DimensionMismatch, "rect vs point dimension");
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] < rc->lo[i] || x[i] > rc->hi[i]) return false;
    return true;
  }
  if (const auto* hs = std::get_if<Halfspace>(&r.shape)) {
    if (hs->normal.size() != x.size())
      fail(ErrorCode::DimensionMismatch, "halfspace vs point dimension");
    double dot = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) dot += hs->normal[i] * x[i];
    return dot >= hs->offset;
  }
  if (const auto* b = std::get_if<Ball>(&r.shape)) {
    if (b->center.size() != x.size()) fail(ErrorCode::DimensionMismatch, "ball vs point dimension");
    double d2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      double diff = x[i] - b->center[i];
      d2 += diff * diff;
    }
    return d2 <= b->radius * b->radius;
  }
  fail(ErrorCode::BadParams, "explicit range has no coordinate membership; use the indexed overload");
}

bool contains(const Range& r, const ColoredPointSet& X, int i) {
  if (i < 0 || i >= X.size()) fail(ErrorCode::IndexOutOfRange, "point index out of range", i);
  if (const auto* e = std::get_if<Explicit>(&r.shape))
    return std::binary_search(e->members.begin(), e->members.end(), i);
  return contains(r, X.point(i));
}

}  // namespace fairnet
