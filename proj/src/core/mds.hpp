#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "core/matrix.hpp"

namespace npt {

struct MdsEmbedding {
  std::vector<std::string> labels;
  Eigen::MatrixXd coordinates;  // N x r, centered at the origin
  Eigen::VectorXd eigenvalues;  // retained top r, descending, clipped at 0
  Eigen::Index r = 0;
  std::size_t clipped_count = 0;      // retained eigenvalues clipped to zero
  double negative_mass_fraction = 0;  // |negative spectrum| / |spectrum|
};

// Classical scaling: double-center the squared-distance matrix, take the top
// r eigenpairs, scale eigenvectors by sqrt eigenvalue. Negative retained
// eigenvalues are clipped to zero and counted; each coordinate column is
// sign-fixed so its largest-magnitude entry is positive.
MdsEmbedding classical_mds(const DistanceMatrix& dist, Eigen::Index r);

// Relative Frobenius residual between two point configurations after
// centering and optimal orthogonal alignment of b onto a.
double procrustes_residual(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

}  // namespace npt
