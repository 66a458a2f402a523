#pragma once

#include <Eigen/Core>

#include "core/types.hpp"

namespace npt {

// Eigenvalue floor applied by the positive-definite projection.
inline constexpr double kPsdFloor = 1e-10;

// Symmetric d x d matrix with unit diagonal, off-diagonals in [-1, 1],
// nonnegative spectrum.
struct CorrelationMatrix {
  Eigen::MatrixXd entries;

  Eigen::Index dimension() const { return entries.rows(); }
};

// Checks the CorrelationMatrix invariants; min_eigenvalue is the spectral
// lower bound to enforce (0 for freshly estimated, kPsdFloor after projection).
void validate_correlation(const CorrelationMatrix& m, double min_eigenvalue = 0.0);

// Pairwise Kendall tau matrix with unit diagonal.
Eigen::MatrixXd kendall_tau_matrix(const EmpiricalDistribution& dist);

// Nearest positive-definite surrogate: clips eigenvalues at the floor and
// renormalizes the diagonal to one, repeating until the floor survives the
// renormalization.
CorrelationMatrix project_psd(const Eigen::MatrixXd& m, double floor = kPsdFloor);

// Latent Gaussian correlation via the sine transform of pairwise Kendall tau,
// PD-projected when d > 2 produces an indefinite estimate.
CorrelationMatrix estimate_latent_correlation(const EmpiricalDistribution& dist);

}  // namespace npt
