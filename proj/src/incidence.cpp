#include "fairnet/incidence.hpp"

#include <bit>
#include <unordered_map>

namespace fairnet {

IncidenceMatrix::IncidenceMatrix(int rows, int cols)
    : n_(cols), words_((cols + 63) / 64),
      bits_(static_cast<std::size_t>(rows) * ((cols + 63) / 64), 0),
      card_(rows, 0) {}

void IncidenceMatrix::set(int row, int col) {
  std::uint64_t& w = bits_[static_cast<std::size_t>(row) * words_ + (col >> 6)];
  std::uint64_t bit = 1ULL << (col & 63);
  if (!(w & bit)) {
    w |= bit;
    card_[row]++;
  }
}

void IncidenceMatrix::attach_weights(const std::vector<double>& weights) {
  if (static_cast<int>(weights.size()) != n_)
    fail(ErrorCode::DimensionMismatch, "weights length must equal column count");
  wsum_.assign(rows(), 0.0);
  for (int r = 0; r < rows(); ++r) {
    double s = 0.0;
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bitsw = word(r, w);
      while (bitsw) {
        int b = std::countr_zero(bitsw);
        s += weights[(w << 6) + b];
        bitsw &= bitsw - 1;
      }
    }
    wsum_[r] = s;
  }
}

std::vector<int> IncidenceMatrix::row_members(int row) const {
  std::vector<int> out;
  out.reserve(card_[row]);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bitsw = word(row, w);
    while (bitsw) {
      int b = std::countr_zero(bitsw);
      out.push_back((w << 6) + b);
      bitsw &= bitsw - 1;
    }
  }
  return out;
}

IncidenceMatrix materialize(const ColoredPointSet& X, const RangeFamily& R) {
  validate_family(R, X.dim(), X.size());
  IncidenceMatrix inc(R.count(), X.size());
  for (int j = 0; j < R.count(); ++j) {
    const Range& r = R.ranges[j];
    if (const auto* e = std::get_if<Explicit>(&r.shape)) {
      for (int i : e->members) inc.set(j, i);
    } else {
      for (int i = 0; i < X.size(); ++i)
        if (contains(r, X.point(i))) inc.set(j, i);
    }
  }
  if (X.has_weights()) inc.attach_weights(X.weights());
  return inc;
}

namespace {

struct RowHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::size_t h = v.size();
    for (std::uint64_t w : v) h ^= static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace

IncidenceMatrix restrict_to(const IncidenceMatrix& inc, const std::vector<int>& T) {
  for (int t : T)
    if (t < 0 || t >= inc.cols()) fail(ErrorCode::IndexOutOfRange, "restriction index out of range", t);

  int nt = static_cast<int>(T.size());
  int words = (nt + 63) / 64;
  std::unordered_map<std::vector<std::uint64_t>, int, RowHash> seen;
  std::vector<std::vector<std::uint64_t>> kept;
  for (int r = 0; r < inc.rows(); ++r) {
    std::vector<std::uint64_t> row(words, 0);
    bool any = false;
    for (int c = 0; c < nt; ++c) {
      if (inc.get(r, T[c])) {
        row[c >> 6] |= 1ULL << (c & 63);
        any = true;
      }
    }
    if (!any) continue;  // empty induced rows dropped
    if (seen.emplace(row, static_cast<int>(kept.size())).second) kept.push_back(std::move(row));
  }

  IncidenceMatrix out(static_cast<int>(kept.size()), nt);
  for (int r = 0; r < static_cast<int>(kept.size()); ++r) {
    for (int c = 0; c < nt; ++c)
      if ((kept[r][c >> 6] >> (c & 63)) & 1u) out.set(r, c);
  }
  return out;
}

IncidenceMatrix select_rows(const IncidenceMatrix& inc, const std::vector<int>& rows) {
  IncidenceMatrix out(static_cast<int>(rows.size()), inc.cols());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    int r = rows[j];
    if (r < 0 || r >= inc.rows()) fail(ErrorCode::IndexOutOfRange, "row index out of range", r);
    for (int c = 0; c < inc.cols(); ++c)
      if (inc.get(r, c)) out.set(static_cast<int>(j), c);
  }
  if (inc.has_weight_sums()) {
    std::vector<double> sums(rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) sums[j] = inc.weight_sum(rows[j]);
    out.set_weight_sum_cache(std::move(sums));
  }
  return out;
}

std::vector<int> heavy_ranges(const IncidenceMatrix& inc, double eps, bool use_weights) {
  if (!(eps > 0.0 && eps <= 1.0)) fail(ErrorCode::InvalidEpsilon, "eps must be in (0,1]");
  std::vector<int> out;
  if (use_weights) {
    if (!inc.has_weight_sums())
      fail(ErrorCode::UnnormalizedWeights, "weighted heavy ranges need attached weight sums");
    for (int r = 0; r < inc.rows(); ++r)
      if (inc.weight_sum(r) >= eps - 1e-12) out.push_back(r);
  } else {
    double threshold = eps * inc.cols();
    for (int r = 0; r < inc.rows(); ++r)
      if (static_cast<double>(inc.cardinality(r)) >= threshold - 1e-9) out.push_back(r);
  }
  return out;
}

}  // namespace fairnet
