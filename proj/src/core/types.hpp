#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace npt {

// One empirical distribution: n_i realization rows by d coordinate columns.
// Immutable after construction; shared freely across workers.
struct EmpiricalDistribution {
  std::string id;
  Eigen::MatrixXd samples;

  Eigen::Index sample_count() const { return samples.rows(); }
  Eigen::Index dimension() const { return samples.cols(); }
};

// At least two realizations (the pairwise rank correlation needs them),
// finite entries, at least one coordinate.
void validate_distribution(const EmpiricalDistribution& dist);

struct DistributionCollection {
  std::vector<EmpiricalDistribution> distributions;
  Eigen::Index dimension = 0;
  bool standardized = false;

  std::size_t size() const { return distributions.size(); }
  std::vector<std::string> labels() const;
};

// Shared dimension, unique ids, valid members.
void validate_collection(const DistributionCollection& collection);

// Pooled per-dimension location/scale. The center is the pooled median; the
// scale is the pooled sample standard deviation taken about the pooled mean
// (denominator count-1). The location and dispersion summaries intentionally
// differ: robust centering, moment-based scaling.
struct StandardizationParams {
  Eigen::VectorXd center;
  Eigen::VectorXd scale;

  Eigen::Index dimension() const { return center.size(); }
};

StandardizationParams compute_standardization(const DistributionCollection& collection);

// Maps every entry to (x - center_j) / scale_j and flags the result.
DistributionCollection apply_standardization(const DistributionCollection& collection,
                                             const StandardizationParams& params);

// compute + apply in one step.
DistributionCollection standardize(const DistributionCollection& collection);

}  // namespace npt
