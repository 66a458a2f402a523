#include "core/correlation.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "core/error.hpp"
#include "core/kendall.hpp"

namespace npt {
namespace {

void require_square_symmetric(const Eigen::MatrixXd& m, const char* who) {
  if (m.rows() != m.cols())
    throw ValidationError(std::string(who) + ": matrix is not square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-8 * scale)
    throw ValidationError(std::string(who) + ": matrix is not symmetric");
}

}  // namespace

void validate_correlation(const CorrelationMatrix& m, double min_eigenvalue) {
  require_square_symmetric(m.entries, "correlation");
  if ((m.entries - m.entries.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw ValidationError("correlation: symmetry beyond 1e-12");
  if ((m.entries.diagonal().array() - 1.0).abs().maxCoeff() > 1e-12)
    throw ValidationError("correlation: diagonal is not one");
  if (m.entries.cwiseAbs().maxCoeff() > 1.0 + 1e-12)
    throw ValidationError("correlation: entry outside [-1, 1]");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.entries,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericError("correlation: eigendecomposition failed");
  if (solver.eigenvalues().minCoeff() < min_eigenvalue - 1e-12)
    throw ValidationError("correlation: spectrum below required floor");
}

Eigen::MatrixXd kendall_tau_matrix(const EmpiricalDistribution& dist) {
  validate_distribution(dist);
  const Eigen::Index d = dist.dimension();
  Eigen::MatrixXd tau = Eigen::MatrixXd::Identity(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const auto xj = std::span<const double>(dist.samples.col(j).data(),
                                            static_cast<std::size_t>(dist.sample_count()));
    for (Eigen::Index l = j + 1; l < d; ++l) {
      const auto xl = std::span<const double>(dist.samples.col(l).data(),
                                              static_cast<std::size_t>(dist.sample_count()));
      const double t = kendall_tau(xj, xl);
      tau(j, l) = t;
      tau(l, j) = t;
    }
  }
  return tau;
}

CorrelationMatrix project_psd(const Eigen::MatrixXd& m, double floor) {
  require_square_symmetric(m, "project_psd");
  if (!(floor > 0.0)) throw ValidationError("project_psd: floor must be positive");
  Eigen::MatrixXd sym = 0.5 * (m + m.transpose());

  // Diagonal renormalization can push the spectrum back under the floor, so
  // clip and renormalize until the floor holds.
  constexpr int kMaxPasses = 50;
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    if (solver.info() != Eigen::Success)
      throw NumericError("project_psd: eigendecomposition failed");
    const bool unit_diag = (sym.diagonal().array() - 1.0).abs().maxCoeff() <= 1e-13;
    if (solver.eigenvalues().minCoeff() >= floor * (1.0 - 1e-12) && unit_diag) {
      CorrelationMatrix out{sym};
      return out;
    }
    const Eigen::VectorXd clipped = solver.eigenvalues().cwiseMax(floor);
    sym = solver.eigenvectors() * clipped.asDiagonal() * solver.eigenvectors().transpose();
    sym = 0.5 * (sym + sym.transpose());
    const Eigen::VectorXd dinv = sym.diagonal().cwiseSqrt().cwiseInverse();
    sym = dinv.asDiagonal() * sym * dinv.asDiagonal();
    sym = 0.5 * (sym + sym.transpose());
    sym.diagonal().setOnes();
    sym = sym.cwiseMax(-1.0).cwiseMin(1.0);
  }
  throw NumericError("project_psd: did not reach the spectral floor");
}

CorrelationMatrix estimate_latent_correlation(const EmpiricalDistribution& dist) {
  const Eigen::Index d = dist.dimension();
  Eigen::MatrixXd tau = kendall_tau_matrix(dist);
  Eigen::MatrixXd rho = Eigen::MatrixXd::Identity(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index l = j + 1; l < d; ++l) {
      const double r = tau_to_latent_rho(tau(j, l));
      rho(j, l) = r;
      rho(l, j) = r;
    }
  }
  // A 2x2 sine-transformed matrix with |rho| <= 1 is always PSD; larger
  // elementwise estimates may be indefinite and need projection.
  if (d > 2) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(rho, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
      throw NumericError("estimate_latent_correlation: eigendecomposition failed");
    if (solver.eigenvalues().minCoeff() <= 0.0) return project_psd(rho);
  }
  return CorrelationMatrix{std::move(rho)};
}

}  // namespace npt
