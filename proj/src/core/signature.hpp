#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "core/correlation.hpp"
#include "core/matrix.hpp"
#include "core/quantile.hpp"
#include "core/types.hpp"

namespace npt {

// Precomputed state for one distribution: a quantile vector per marginal
// (columns of `quantiles`, all on the shared grid) plus the latent
// correlation matrix. Everything a pairwise distance needs.
struct DistributionSignature {
  std::string id;
  QuantileGrid grid;
  Eigen::MatrixXd quantiles;  // m x d, column j = marginal j
  CorrelationMatrix latent;
};

DistributionSignature precompute_signature(const EmpiricalDistribution& dist,
                                           const QuantileGrid& grid);

struct SignatureSet {
  std::vector<DistributionSignature> signatures;
  QuantileGrid grid{2};
  double elapsed_ms = 0.0;

  std::size_t size() const { return signatures.size(); }
  Eigen::Index dimension() const {
    return signatures.empty() ? 0 : signatures.front().quantiles.cols();
  }
  std::vector<std::string> labels() const;
};

// Phase 1: one signature per distribution, parallel across distributions.
SignatureSet precompute_signatures(const DistributionCollection& collection,
                                   const QuantileGrid& grid, int workers);

// Squared nonparanormal transport distance: per-marginal squared 1D
// transport costs plus the squared Bures gap of the latent correlations.
double npt_sq(const DistributionSignature& a, const DistributionSignature& b);

// The two nonnegative components of npt_sq, exposed for diagnostics.
struct NptParts {
  double marginal = 0.0;
  double bures = 0.0;

  double total() const { return marginal + bures; }
};

NptParts npt_sq_parts(const DistributionSignature& a, const DistributionSignature& b);

// Phase 2 only: pairwise assembly over precomputed signatures.
DistanceMatrix npt_distance_matrix(const SignatureSet& signatures, int workers);

// Both phases; warns on stderr when the collection is not standardized.
DistanceMatrix npt_distance_matrix(const DistributionCollection& collection,
                                   const QuantileGrid& grid, int workers);

// Signature cache: a single JSON document, or a CSV bundle (a directory of
// grid.csv, quantiles.csv, latent.csv). Loaders re-validate invariants.
void write_signatures_json(const SignatureSet& set, const std::string& path);
SignatureSet read_signatures_json(const std::string& path);
void write_signatures_csv(const SignatureSet& set, const std::string& directory);
SignatureSet read_signatures_csv(const std::string& directory);

}  // namespace npt
