#include "core/kendall.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <vector>

#include "core/error.hpp"

namespace npt {
namespace {

void validate_pair(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw ValidationError("kendall_tau: length mismatch");
  if (x.size() < 2)
    throw ValidationError("kendall_tau: needs at least 2 observations");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i]))
      throw ValidationError("kendall_tau: non-finite input");
  }
}

bool has_ties(std::span<const double> v) {
  std::vector<double> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

std::int64_t pair_count(std::size_t n) {
  const auto nn = static_cast<std::int64_t>(n);
  return nn * (nn - 1) / 2;
}

// Counts inversions while merge-sorting v in place.
std::int64_t merge_count(std::vector<double>& v, std::vector<double>& buf,
                         std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t count = merge_count(v, buf, lo, mid) + merge_count(v, buf, mid, hi);
  std::size_t a = lo, b = mid, out = lo;
  while (a < mid && b < hi) {
    if (v[b] < v[a]) {
      count += static_cast<std::int64_t>(mid - a);
      buf[out++] = v[b++];
    } else {
      buf[out++] = v[a++];
    }
  }
  while (a < mid) buf[out++] = v[a++];
  while (b < hi) buf[out++] = v[b++];
  std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo),
            buf.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return count;
}

}  // namespace

double kendall_tau_direct(std::span<const double> x, std::span<const double> y) {
  validate_pair(x, y);
  const std::size_t n = x.size();
  std::int64_t numerator = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      const int sx = (x[k] > x[l]) - (x[k] < x[l]);
      const int sy = (y[k] > y[l]) - (y[k] < y[l]);
      numerator += sx * sy;
    }
  }
  return static_cast<double>(numerator) / static_cast<double>(pair_count(n));
}

double kendall_tau_tiefree_fast(std::span<const double> x, std::span<const double> y) {
  validate_pair(x, y);
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  // With x ascending, discordant pairs are exactly the inversions of y.
  std::vector<double> y_by_x(n);
  for (std::size_t i = 0; i < n; ++i) y_by_x[i] = y[order[i]];
  std::vector<double> buf(n);
  const std::int64_t inversions = merge_count(y_by_x, buf, 0, n);
  const std::int64_t total = pair_count(n);
  return static_cast<double>(total - 2 * inversions) / static_cast<double>(total);
}

double kendall_tau(std::span<const double> x, std::span<const double> y) {
  validate_pair(x, y);
  if (has_ties(x) || has_ties(y)) return kendall_tau_direct(x, y);
  return kendall_tau_tiefree_fast(x, y);
}

double tau_to_latent_rho(double tau) {
  if (!(tau >= -1.0 && tau <= 1.0))
    throw ValidationError("tau_to_latent_rho: tau outside [-1, 1]");
  return std::sin(std::numbers::pi * tau / 2.0);
}

}  // namespace npt
