#include "fairnet/fairness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace fairnet {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

std::vector<int> subset_color_counts(const std::vector<int>& subset, const ColoredPointSet& X,
                                     int k) {
  std::vector<int> counts(k, 0);
  for (int i : subset) {
    if (i < 0 || i >= X.size()) fail(ErrorCode::IndexOutOfRange, "subset index out of range", i);
    counts[X.color(i)]++;
  }
  return counts;
}

}  // namespace

void GroupRatios::validate() const {
  if (taus_.empty()) fail(ErrorCode::InvalidRatios, "ratios vector is empty");
  double sum = 0.0;
  for (std::size_t l = 0; l < taus_.size(); ++l) {
    if (!(taus_[l] > 0.0 && taus_[l] <= 1.0))
      fail(ErrorCode::InvalidRatios, "each ratio must lie in (0,1]", static_cast<long long>(l));
    sum += taus_[l];
  }
  if (std::abs(sum - 1.0) > 1e-9) fail(ErrorCode::InvalidRatios, "ratios must sum to 1");
}

GroupRatios GroupRatios::from_doubles(std::vector<double> taus) {
  GroupRatios g;
  g.taus_ = std::move(taus);
  g.validate();
  return g;
}

GroupRatios GroupRatios::from_fractions(std::vector<std::pair<std::int64_t, std::int64_t>> fracs) {
  GroupRatios g;
  g.fracs_ = std::move(fracs);
  g.taus_.reserve(g.fracs_.size());
  for (auto& [num, den] : g.fracs_) {
    if (den <= 0) fail(ErrorCode::InvalidRatios, "fraction denominator must be positive");
    std::int64_t d = std::gcd(num, den);
    if (d > 1) {
      num /= d;
      den /= d;
    }
    g.taus_.push_back(static_cast<double>(num) / static_cast<double>(den));
  }
  g.validate();
  return g;
}

GroupRatios GroupRatios::dp(const ColoredPointSet& X, bool use_weights) {
  if (X.size() == 0) fail(ErrorCode::EmptyGroup, "point set is empty");
  if (use_weights) {
    std::vector<double> sums = X.normalized_color_weights();
    for (std::size_t l = 0; l < sums.size(); ++l)
      if (sums[l] <= 0.0) fail(ErrorCode::EmptyGroup, "group has no weight", static_cast<long long>(l));
    return from_doubles(std::move(sums));
  }
  std::vector<int> counts = X.color_counts();
  std::vector<std::pair<std::int64_t, std::int64_t>> fracs;
  fracs.reserve(counts.size());
  for (std::size_t l = 0; l < counts.size(); ++l) {
    if (counts[l] == 0) fail(ErrorCode::EmptyGroup, "group is empty", static_cast<long long>(l));
    fracs.emplace_back(counts[l], X.size());
  }
  return from_fractions(std::move(fracs));
}

GroupRatios GroupRatios::parse(const std::string& text, const ColoredPointSet* X,
                               bool use_weights) {
  if (text == "dp") {
    if (X == nullptr) fail(ErrorCode::InvalidRatios, "dp ratios need a point set");
    return dp(*X, use_weights);
  }
  std::vector<std::string> parts = split(text, ',');
  bool fractional = text.find('/') != std::string::npos;
  if (fractional) {
    std::vector<std::pair<std::int64_t, std::int64_t>> fracs;
    for (const std::string& p : parts) {
      std::size_t slash = p.find('/');
      if (slash == std::string::npos) {
        // whole number mixed into a fraction list
        fracs.emplace_back(std::atoll(p.c_str()), 1);
      } else {
        fracs.emplace_back(std::atoll(p.substr(0, slash).c_str()),
                           std::atoll(p.substr(slash + 1).c_str()));
      }
    }
    return from_fractions(std::move(fracs));
  }
  std::vector<double> taus;
  for (const std::string& p : parts) {
    char* end = nullptr;
    double v = std::strtod(p.c_str(), &end);
    if (end == p.c_str()) fail(ErrorCode::ParseError, "bad ratio value: " + p);
    taus.push_back(v);
  }
  return from_doubles(std::move(taus));
}

bool GroupRatios::integral_at(std::int64_t s) const {
  if (exact()) {
    for (const auto& [num, den] : fracs_)
      if ((s * num) % den != 0) return false;
    return true;
  }
  for (double t : taus_) {
    double x = t * static_cast<double>(s);
    if (std::abs(x - std::round(x)) > 1e-9 * std::max<double>(1.0, static_cast<double>(s)))
      return false;
  }
  return true;
}

std::vector<std::int64_t> GroupRatios::counts_at(std::int64_t s) const {
  std::vector<std::int64_t> out;
  out.reserve(taus_.size());
  if (exact()) {
    for (const auto& [num, den] : fracs_) out.push_back(s * num / den);
  } else {
    for (double t : taus_) out.push_back(static_cast<std::int64_t>(std::llround(t * s)));
  }
  return out;
}

double f2(const std::vector<int>& subset, const ColoredPointSet& X, const GroupRatios& T) {
  if (subset.empty()) fail(ErrorCode::EmptySubset, "f2 of an empty subset");
  if (T.k() != X.num_colors()) fail(ErrorCode::InvalidRatios, "ratio count differs from k");
  std::vector<int> counts = subset_color_counts(subset, X, T.k());
  double inv = 1.0 / static_cast<double>(subset.size());
  double acc = 0.0;
  for (int l = 0; l < T.k(); ++l) {
    double dev = counts[l] * inv - T.tau(l);
    acc += dev * dev;
  }
  return acc / T.k();
}

double finf(const std::vector<int>& subset, const ColoredPointSet& X, const GroupRatios& T) {
  if (subset.empty()) fail(ErrorCode::EmptySubset, "finf of an empty subset");
  if (T.k() != X.num_colors()) fail(ErrorCode::InvalidRatios, "ratio count differs from k");
  std::vector<int> counts = subset_color_counts(subset, X, T.k());
  double inv = 1.0 / static_cast<double>(subset.size());
  double worst = 0.0;
  for (int l = 0; l < T.k(); ++l)
    worst = std::max(worst, std::abs(counts[l] * inv - T.tau(l)));
  return worst;
}

}  // namespace fairnet
