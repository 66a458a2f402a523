#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/correlation.hpp"
#include "core/types.hpp"

namespace npt {

// One nonparanormal distribution: Toeplitz latent correlation rho^|j-k| and
// the fixed increasing marginal mixture transform indexed by lambda.
struct NpnSpec {
  double rho = 0.0;
  double lambda = 0.0;
  Eigen::Index dimension = 2;
  Eigen::Index sample_count = 100;
  std::uint64_t seed = 0;
};

// AR(1) structure: entries rho^|j-k|, positive definite for |rho| < 1.
CorrelationMatrix toeplitz_correlation(double rho, Eigen::Index d);

// (1-lambda) * exp(0.6 z) + lambda * 0.8 * log(1 + 0.8 exp(z)); strictly
// increasing in z for every lambda in [0, 1]. Large z goes through the
// shifted-log identity to avoid overflow in the second component.
double marginal_transform(double z, double lambda);

// Draws latent Gaussians via the Cholesky factor of the Toeplitz matrix and
// pushes each coordinate through the marginal transform. Deterministic in
// the seed.
EmpiricalDistribution sample_npn(const NpnSpec& spec);

struct SimulationGrid {
  std::vector<double> rho_values;
  std::vector<double> lambda_values;
  Eigen::Index sample_count = 100;
  Eigen::Index dimension = 2;
  std::uint64_t base_seed = 0;

  std::size_t cell_count() const { return rho_values.size() * lambda_values.size(); }
};

std::vector<double> linspace(double lo, double hi, int count);

SimulationGrid make_grid(double rho_min, double rho_max, int rho_count,
                         double lambda_min, double lambda_max, int lambda_count,
                         Eigen::Index sample_count, Eigen::Index dimension,
                         std::uint64_t base_seed);

std::string grid_cell_id(std::size_t index, double rho, double lambda);

// One distribution per (rho, lambda) cell, row-major over rho then lambda,
// seeded as base_seed + cell index.
DistributionCollection generate_grid(const SimulationGrid& grid);

// Sidecar covariates: id,rho,lambda per cell.
void write_grid_covariates_csv(const SimulationGrid& grid, const std::string& path);

}  // namespace npt
