#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "loewner/error.hpp"

// Empirical distribution comparisons: ECDF, Kolmogorov-Smirnov distances
// and normalized histograms.

namespace loewner::stats {

/// A nonempty sample of finite values, stored sorted.
class Sample {
 public:
  explicit Sample(std::vector<double> values) : values_(std::move(values)) {
    require(!values_.empty(), "sample must be nonempty");
    for (double v : values_) require(std::isfinite(v), "sample values must be finite");
    std::sort(values_.begin(), values_.end());
  }

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double min() const { return values_.front(); }
  double max() const { return values_.back(); }

 private:
  std::vector<double> values_;
};

/// Fraction of the sample <= x.
inline double ecdf(const Sample& s, double x) {
  const auto& v = s.values();
  return static_cast<double>(std::upper_bound(v.begin(), v.end(), x) - v.begin()) / static_cast<double>(v.size());
}

/// sup_x |ECDF(x) - F(x)| for a continuous reference F, evaluated on both
/// sides of every jump.
template <class Cdf>
double ks_one_sample(const Sample& s, Cdf&& cdf) {
  const auto& v = s.values();
  const double n = static_cast<double>(v.size());
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double f = cdf(v[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

/// sup over pooled points of |ECDF_1 - ECDF_2|; ties are consumed together.
inline double ks_two_sample(const Sample& a, const Sample& b) {
  const auto& x = a.values();
  const auto& y = b.values();
  const double nx = static_cast<double>(x.size());
  const double ny = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double t = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == t) ++i;
    while (j < y.size() && y[j] == t) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  return d;
}

struct HistogramBin {
  double center;
  double density;
};

/// Equal-width bins on [lo, hi]; density = count / (n * width), so the
/// densities integrate to the fraction of the sample inside [lo, hi].
inline std::vector<HistogramBin> histogram(const Sample& s, double lo, double hi, std::size_t bins) {
  require(lo < hi, "histogram range must be nonempty");
  require(bins >= 1, "histogram needs at least one bin");
  const double width = (hi - lo) / static_cast<double>(bins);
  std::vector<std::size_t> counts(bins, 0);
  for (double v : s.values()) {
    if (v < lo || v > hi) continue;
    const auto k = std::min(static_cast<std::size_t>((v - lo) / width), bins - 1);
    ++counts[k];
  }
  std::vector<HistogramBin> out(bins);
  const double n = static_cast<double>(s.size());
  for (std::size_t k = 0; k < bins; ++k) {
    out[k] = {lo + (static_cast<double>(k) + 0.5) * width, static_cast<double>(counts[k]) / (n * width)};
  }
  return out;
}

}  // namespace loewner::stats
