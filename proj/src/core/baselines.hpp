#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "core/types.hpp"

namespace npt {

// Squared Euclidean ground costs between the rows of a and b.
Eigen::MatrixXd squared_cost_matrix(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

// Assignment instances larger than this are refused (O(n^3) solver).
inline constexpr Eigen::Index kExactOtMaxSamples = 2000;

// Exact squared transport cost for two equal-size uniform-weight samples:
// uniform empirical measures admit an optimal permutation coupling, so the
// problem reduces to a minimum-cost assignment, solved in O(n^3).
double exact_ot_sq(const EmpiricalDistribution& a, const EmpiricalDistribution& b);

struct SlicedConfig {
  int n_slices = 10;
  std::uint64_t seed = 0;
  bool rescale_by_d = true;
};

// Mean over seeded random unit directions of the exact squared 1D transport
// cost of the projected samples, optionally rescaled by the dimension.
double sliced_wasserstein_sq(const EmpiricalDistribution& a,
                             const EmpiricalDistribution& b,
                             const SlicedConfig& config);

struct SinkhornConfig {
  double epsilon = 1.0;
  int max_iters = 10000;
  double tolerance = 1e-9;
};

struct SinkhornResult {
  double cost = 0.0;  // sharp transport cost <plan, cost>, no entropy term
  int iterations = 0;
};

// Log-domain Sinkhorn with uniform marginals on the squared Euclidean cost.
// Stops when the worst marginal violation drops below the tolerance or at
// max_iters; non-finite scalings raise a numeric error naming the iteration.
SinkhornResult sinkhorn_sq(const EmpiricalDistribution& a,
                           const EmpiricalDistribution& b,
                           const SinkhornConfig& config);

}  // namespace npt
