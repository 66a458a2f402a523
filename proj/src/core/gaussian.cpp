#include "core/gaussian.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "core/error.hpp"

namespace npt {

Eigen::MatrixXd sqrtm_psd(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols())
    throw ValidationError("sqrtm_psd: matrix is not square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-8 * scale)
    throw ValidationError("sqrtm_psd: matrix is not symmetric");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (m + m.transpose()));
  if (solver.info() != Eigen::Success)
    throw NumericError("sqrtm_psd: eigendecomposition failed");
  const Eigen::VectorXd& values = solver.eigenvalues();
  if (values.minCoeff() < -1e-10 * scale)
    throw ValidationError("sqrtm_psd: matrix has a significantly negative eigenvalue");
  const Eigen::VectorXd roots = values.cwiseMax(0.0).cwiseSqrt();
  Eigen::MatrixXd root =
      solver.eigenvectors() * roots.asDiagonal() * solver.eigenvectors().transpose();
  return 0.5 * (root + root.transpose());
}

double bures_sq(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ValidationError("bures_sq: dimension mismatch");
  const Eigen::MatrixXd root_a = sqrtm_psd(a);
  Eigen::MatrixXd inner = root_a * b * root_a;
  inner = 0.5 * (inner + inner.transpose());
  const Eigen::MatrixXd cross = sqrtm_psd(inner);
  const double value = a.trace() + b.trace() - 2.0 * cross.trace();
  if (value < -1e-8)
    throw NumericError("bures_sq: negative value beyond rounding tolerance");
  return std::max(value, 0.0);
}

double gaussian_wasserstein_sq(const GaussianParams& a, const GaussianParams& b) {
  if (a.mean.size() != b.mean.size())
    throw ValidationError("gaussian_wasserstein_sq: dimension mismatch");
  return (a.mean - b.mean).squaredNorm() + bures_sq(a.covariance, b.covariance);
}

}  // namespace npt
