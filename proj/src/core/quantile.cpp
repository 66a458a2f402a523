#include "core/quantile.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "core/error.hpp"

namespace npt {

QuantileGrid::QuantileGrid(std::size_t m) {
  if (m < 2) throw ValidationError("quantile grid needs at least 2 points");
  points_.resize(m);
  const double denom = static_cast<double>(m - 1);
  for (std::size_t k = 0; k < m; ++k)
    points_[k] = static_cast<double>(k) / denom;
  points_.front() = 0.0;
  points_.back() = 1.0;
}

std::vector<double> empirical_quantiles(std::span<const double> samples,
                                        const QuantileGrid& grid) {
  if (samples.empty()) throw ValidationError("empirical_quantiles: empty sample vector");
  std::vector<double> sorted(samples.begin(), samples.end());
  for (const double v : sorted) {
    if (!std::isfinite(v))
      throw ValidationError("empirical_quantiles: non-finite sample value");
  }
  std::sort(sorted.begin(), sorted.end());

  const std::size_t n = sorted.size();
  const double dn = static_cast<double>(n);
  std::vector<double> out(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double p = grid.point(k);
    if (p <= 0.0) {
      out[k] = sorted.front();
      continue;
    }
    // inf{x : F_n(x) >= p} is the ceil(p*n)-th order statistic. Nudge below
    // the exact product so p hitting a step boundary stays on that step.
    const double t = p * dn;
    double idx = std::ceil(t - 1e-9 * std::max(1.0, t));
    idx = std::clamp(idx, 1.0, dn);
    out[k] = sorted[static_cast<std::size_t>(idx) - 1];
  }
  return out;
}

double wasserstein1d_sq(std::span<const double> qa, std::span<const double> qb,
                        const QuantileGrid& grid) {
  const std::size_t m = grid.size();
  if (qa.size() != m || qb.size() != m)
    throw ValidationError("wasserstein1d_sq: quantile vector length mismatch");
  // Uniform spacing collapses the trapezoidal rule to
  // (sum of integrand - half the endpoints) / (m - 1).
  double sum = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double gap = qa[k] - qb[k];
    sum += gap * gap;
  }
  const double first = (qa[0] - qb[0]) * (qa[0] - qb[0]);
  const double last = (qa[m - 1] - qb[m - 1]) * (qa[m - 1] - qb[m - 1]);
  return (sum - 0.5 * (first + last)) / static_cast<double>(m - 1);
}

double wasserstein1d_sq_sorted(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw ValidationError("wasserstein1d_sq_sorted: unequal sample sizes");
  if (a.empty()) throw ValidationError("wasserstein1d_sq_sorted: empty samples");
  assert(std::is_sorted(a.begin(), a.end()));
  assert(std::is_sorted(b.begin(), b.end()));
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double gap = a[k] - b[k];
    sum += gap * gap;
  }
  return sum / static_cast<double>(a.size());
}

}  // namespace npt
