#include "core/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/quantile.hpp"

namespace npt {
namespace {

void require_same_dimension(const EmpiricalDistribution& a,
                            const EmpiricalDistribution& b, const char* who) {
  if (a.dimension() != b.dimension())
    throw ValidationError(std::string(who) + ": dimension mismatch (" +
                          std::to_string(a.dimension()) + " vs " +
                          std::to_string(b.dimension()) + ")");
}

// Shortest-augmenting-path assignment with potentials; cost is row-major n*n.
double assignment_cost(const std::vector<double>& cost, Eigen::Index size) {
  const int n = static_cast<int>(size);
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1, 0.0);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const int i0 = match[j0];
      const double* row = cost.data() + static_cast<std::size_t>(i0 - 1) * n;
      double delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double reduced = row[j - 1] - u[i0] - v[j];
        if (reduced < minv[j]) {
          minv[j] = reduced;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    while (j0 != 0) {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    }
  }
  double total = 0.0;
  for (int j = 1; j <= n; ++j)
    total += cost[static_cast<std::size_t>(match[j] - 1) * n + (j - 1)];
  return total;
}

double log_sum_exp(std::span<const double> terms) {
  double peak = -std::numeric_limits<double>::infinity();
  for (const double t : terms) peak = std::max(peak, t);
  if (!std::isfinite(peak)) return peak;
  double sum = 0.0;
  for (const double t : terms) sum += std::exp(t - peak);
  return peak + std::log(sum);
}

}  // namespace

Eigen::MatrixXd squared_cost_matrix(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.cols() != b.cols())
    throw ValidationError("cost matrix: dimension mismatch");
  const Eigen::VectorXd a_sq = a.rowwise().squaredNorm();
  const Eigen::VectorXd b_sq = b.rowwise().squaredNorm();
  Eigen::MatrixXd cost = -2.0 * a * b.transpose();
  cost.colwise() += a_sq;
  cost.rowwise() += b_sq.transpose();
  return cost.cwiseMax(0.0);
}

double exact_ot_sq(const EmpiricalDistribution& a, const EmpiricalDistribution& b) {
  require_same_dimension(a, b, "exact_ot_sq");
  if (a.sample_count() != b.sample_count())
    throw ValidationError(
        "exact_ot_sq: unequal sample sizes (" + std::to_string(a.sample_count()) + " vs " +
        std::to_string(b.sample_count()) +
        "); the assignment formulation needs uniform equal-size samples — use sinkhorn");
  const Eigen::Index n = a.sample_count();
  if (n > kExactOtMaxSamples)
    throw ValidationError("exact_ot_sq: " + std::to_string(n) + " samples exceeds the " +
                          std::to_string(kExactOtMaxSamples) + " sample guard");
  const Eigen::MatrixXd cost = squared_cost_matrix(a.samples, b.samples);
  std::vector<double> row_major(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      row_major[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] = cost(i, j);
  return assignment_cost(row_major, n) / static_cast<double>(n);
}

double sliced_wasserstein_sq(const EmpiricalDistribution& a,
                             const EmpiricalDistribution& b,
                             const SlicedConfig& config) {
  require_same_dimension(a, b, "sliced_wasserstein_sq");
  if (a.sample_count() != b.sample_count())
    throw ValidationError("sliced_wasserstein_sq: unequal sample sizes");
  if (config.n_slices < 1)
    throw ValidationError("sliced_wasserstein_sq: need at least one slice");
  const Eigen::Index d = a.dimension();
  const auto n = static_cast<std::size_t>(a.sample_count());

  std::mt19937_64 rng(config.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd direction(d);
  std::vector<double> pa(n), pb(n);
  double total = 0.0;
  for (int slice = 0; slice < config.n_slices; ++slice) {
    double norm_sq = 0.0;
    do {
      for (Eigen::Index j = 0; j < d; ++j) direction(j) = gauss(rng);
      norm_sq = direction.squaredNorm();
    } while (norm_sq == 0.0);
    direction /= std::sqrt(norm_sq);
    Eigen::Map<Eigen::VectorXd>(pa.data(), a.sample_count()) = a.samples * direction;
    Eigen::Map<Eigen::VectorXd>(pb.data(), b.sample_count()) = b.samples * direction;
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    total += wasserstein1d_sq_sorted(pa, pb);
  }
  const double mean = total / static_cast<double>(config.n_slices);
  return config.rescale_by_d ? mean * static_cast<double>(d) : mean;
}

SinkhornResult sinkhorn_sq(const EmpiricalDistribution& a,
                           const EmpiricalDistribution& b,
                           const SinkhornConfig& config) {
  require_same_dimension(a, b, "sinkhorn_sq");
  if (a.sample_count() < 1 || b.sample_count() < 1)
    throw ValidationError("sinkhorn_sq: empty sample set");
  if (!(config.epsilon > 0.0))
    throw ValidationError("sinkhorn_sq: epsilon must be positive");
  if (config.max_iters < 1)
    throw ValidationError("sinkhorn_sq: max_iters must be at least 1");
  if (!(config.tolerance > 0.0))
    throw ValidationError("sinkhorn_sq: tolerance must be positive");

  const Eigen::Index na = a.sample_count();
  const Eigen::Index nb = b.sample_count();
  const double eps = config.epsilon;
  const double log_wa = -std::log(static_cast<double>(na));
  const double log_wb = -std::log(static_cast<double>(nb));
  const Eigen::MatrixXd cost = squared_cost_matrix(a.samples, b.samples);

  Eigen::VectorXd f = Eigen::VectorXd::Zero(na);
  Eigen::VectorXd g = Eigen::VectorXd::Zero(nb);
  std::vector<double> terms(static_cast<std::size_t>(std::max(na, nb)));

  SinkhornResult result;
  for (int iter = 1; iter <= config.max_iters; ++iter) {
    for (Eigen::Index i = 0; i < na; ++i) {
      for (Eigen::Index j = 0; j < nb; ++j)
        terms[static_cast<std::size_t>(j)] = (g(j) - cost(i, j)) / eps + log_wb;
      f(i) = -eps * log_sum_exp({terms.data(), static_cast<std::size_t>(nb)});
    }
    for (Eigen::Index j = 0; j < nb; ++j) {
      for (Eigen::Index i = 0; i < na; ++i)
        terms[static_cast<std::size_t>(i)] = (f(i) - cost(i, j)) / eps + log_wa;
      g(j) = -eps * log_sum_exp({terms.data(), static_cast<std::size_t>(na)});
    }
    if (!f.allFinite() || !g.allFinite())
      throw NumericError("sinkhorn_sq: non-finite scaling at iteration " +
                         std::to_string(iter));
    result.iterations = iter;

    // After the g-update the column marginals are exact; convergence is the
    // worst row-marginal violation.
    double violation = 0.0;
    for (Eigen::Index i = 0; i < na; ++i) {
      double row_sum = 0.0;
      for (Eigen::Index j = 0; j < nb; ++j)
        row_sum += std::exp((f(i) + g(j) - cost(i, j)) / eps + log_wa + log_wb);
      violation = std::max(violation, std::abs(row_sum - std::exp(log_wa)));
    }
    if (violation < config.tolerance) break;
  }

  double total = 0.0;
  for (Eigen::Index i = 0; i < na; ++i)
    for (Eigen::Index j = 0; j < nb; ++j)
      total += std::exp((f(i) + g(j) - cost(i, j)) / eps + log_wa + log_wb) * cost(i, j);
  if (!std::isfinite(total))
    throw NumericError("sinkhorn_sq: non-finite transport cost after " +
                       std::to_string(result.iterations) + " iterations");
  result.cost = total;
  return result;
}

}  // namespace npt
