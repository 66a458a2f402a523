#pragma once

#include <Eigen/Core>

namespace npt {

struct GaussianParams {
  Eigen::VectorXd mean;
  Eigen::MatrixXd covariance;
};

// Symmetric PSD square root via eigendecomposition; eigenvalues in
// [-1e-10, 0) are treated as rounding noise and clipped to zero.
Eigen::MatrixXd sqrtm_psd(const Eigen::MatrixXd& m);

// Squared Bures distance: tr(a) + tr(b) - 2 tr((a^{1/2} b a^{1/2})^{1/2}).
// Tiny negative results (> -1e-8) are clamped to zero.
double bures_sq(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

// Closed-form squared transport distance between Gaussians:
// squared mean gap plus the Bures term of the covariances.
double gaussian_wasserstein_sq(const GaussianParams& a, const GaussianParams& b);

}  // namespace npt
