#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fairnet/geometry.hpp"

namespace fairnet {

// Materialized point-in-range membership: m bitvector rows over n columns,
// with per-row cardinality (and weight-sum, when weights are present) caches.
class IncidenceMatrix {
 public:
  IncidenceMatrix() : n_(0), words_(0) {}
  IncidenceMatrix(int rows, int cols);

  int rows() const { return static_cast<int>(card_.size()); }
  int cols() const { return n_; }

  bool get(int row, int col) const {
    return (word(row, col >> 6) >> (col & 63)) & 1u;
  }
  void set(int row, int col);  // build-time only; keeps caches in sync

  int cardinality(int row) const { return card_[row]; }
  bool has_weight_sums() const { return !wsum_.empty(); }
  double weight_sum(int row) const { return wsum_[row]; }

  std::span<const std::uint64_t> row_words(int row) const {
    return {bits_.data() + static_cast<std::size_t>(row) * words_, static_cast<std::size_t>(words_)};
  }

  // Recomputes the per-row weight-sum cache from the given weights.
  void attach_weights(const std::vector<double>& weights);
  void set_weight_sum_cache(std::vector<double> sums) { wsum_ = std::move(sums); }

  // Members of a row as sorted indices.
  std::vector<int> row_members(int row) const;

  int words_per_row() const { return words_; }

 private:
  std::uint64_t word(int row, int w) const {
    return bits_[static_cast<std::size_t>(row) * words_ + w];
  }

  int n_;
  int words_;
  std::vector<std::uint64_t> bits_;
  std::vector<int> card_;
  std::vector<double> wsum_;
};

// Row j bit i set iff point i of X lies in range j. Weight sums are cached
// when X carries weights.
IncidenceMatrix materialize(const ColoredPointSet& X, const RangeFamily& R);

// Rows induced on the index set T (columns renumbered 0..|T|-1 in T's order),
// with empty rows dropped and duplicate rows collapsed to their first
// occurrence. |T| must be within [0, n) bounds.
IncidenceMatrix restrict_to(const IncidenceMatrix& inc, const std::vector<int>& T);

// New matrix holding only the selected rows (columns unchanged).
IncidenceMatrix select_rows(const IncidenceMatrix& inc, const std::vector<int>& rows);

// Indices of rows with cardinality >= eps*n, or weight sum >= eps - 1e-12
// when use_weights is set (weights must be attached and normalized).
std::vector<int> heavy_ranges(const IncidenceMatrix& inc, double eps, bool use_weights);

}  // namespace fairnet
