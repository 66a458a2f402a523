#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace npt {

inline constexpr std::size_t kDefaultQuantileCount = 100;

// Equally spaced probability grid 0 = u_1 < ... < u_m = 1.
class QuantileGrid {
 public:
  explicit QuantileGrid(std::size_t m);

  std::size_t size() const { return points_.size(); }
  double point(std::size_t k) const { return points_[k]; }
  const std::vector<double>& points() const { return points_; }

  friend bool operator==(const QuantileGrid& a, const QuantileGrid& b) {
    return a.size() == b.size();
  }

 private:
  std::vector<double> points_;
};

// Left-continuous (inf-definition) empirical quantiles on the grid; the
// sample minimum is used at p = 0. Sorts once, O(n log n + m).
std::vector<double> empirical_quantiles(std::span<const double> samples,
                                        const QuantileGrid& grid);

// Trapezoidal approximation of the integral over [0,1] of the squared gap
// between two quantile functions sampled on a shared uniform grid.
double wasserstein1d_sq(std::span<const double> qa, std::span<const double> qb,
                        const QuantileGrid& grid);

// Exact squared 1D transport cost for two equal-size sorted samples with
// uniform weights: mean of squared differences of order statistics. Serves
// as the independent oracle for the grid approximation.
double wasserstein1d_sq_sorted(std::span<const double> a, std::span<const double> b);

}  // namespace npt
