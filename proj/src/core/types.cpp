#include "core/types.hpp"

#include <cmath>
#include <unordered_set>

#include "core/error.hpp"
#include "core/parallel.hpp"
#include "core/stats.hpp"

namespace npt {

void validate_distribution(const EmpiricalDistribution& dist) {
  if (dist.dimension() < 1)
    throw ValidationError("distribution '" + dist.id + "': dimension must be >= 1");
  if (dist.sample_count() < 2)
    throw ValidationError("distribution '" + dist.id + "': needs at least 2 realizations");
  if (!dist.samples.allFinite())
    throw ValidationError("distribution '" + dist.id + "': non-finite sample values");
}

std::vector<std::string> DistributionCollection::labels() const {
  std::vector<std::string> out;
  out.reserve(distributions.size());
  for (const auto& dist : distributions) out.push_back(dist.id);
  return out;
}

void validate_collection(const DistributionCollection& collection) {
  if (collection.distributions.empty())
    throw ValidationError("collection is empty");
  std::unordered_set<std::string> seen;
  for (const auto& dist : collection.distributions) {
    validate_distribution(dist);
    if (dist.dimension() != collection.dimension)
      throw ValidationError("distribution '" + dist.id + "': dimension " +
                            std::to_string(dist.dimension()) + " != collection dimension " +
                            std::to_string(collection.dimension));
    if (!seen.insert(dist.id).second)
      throw ValidationError("duplicate distribution id '" + dist.id + "'");
  }
}

StandardizationParams compute_standardization(const DistributionCollection& collection) {
  validate_collection(collection);
  const Eigen::Index d = collection.dimension;
  StandardizationParams params;
  params.center.resize(d);
  params.scale.resize(d);

  std::size_t total = 0;
  for (const auto& dist : collection.distributions)
    total += static_cast<std::size_t>(dist.sample_count());

  // Dimensions are independent; the pooled pass parallelizes per dimension.
  parallel_chunks(static_cast<std::size_t>(d), 0, [&](std::size_t begin, std::size_t end) {
    std::vector<double> pooled;
    pooled.reserve(total);
    for (std::size_t jj = begin; jj < end; ++jj) {
      const Eigen::Index j = static_cast<Eigen::Index>(jj);
      pooled.clear();
      double sum = 0.0;
      for (const auto& dist : collection.distributions) {
        for (Eigen::Index k = 0; k < dist.sample_count(); ++k) {
          const double v = dist.samples(k, j);
          pooled.push_back(v);
          sum += v;
        }
      }
      const double mean = sum / static_cast<double>(pooled.size());
      double ssq = 0.0;
      for (const double v : pooled) ssq += (v - mean) * (v - mean);
      const double scale = std::sqrt(ssq / static_cast<double>(pooled.size() - 1));
      if (!(scale > 0.0) || !std::isfinite(scale))
        throw ValidationError("degenerate scale: pooled dimension " + std::to_string(jj) +
                              " has zero standard deviation");
      params.center(j) = median_of(pooled);
      params.scale(j) = scale;
    }
  });
  return params;
}

DistributionCollection apply_standardization(const DistributionCollection& collection,
                                             const StandardizationParams& params) {
  if (params.dimension() != collection.dimension)
    throw ValidationError("standardization params dimension " +
                          std::to_string(params.dimension()) + " != collection dimension " +
                          std::to_string(collection.dimension));
  DistributionCollection out;
  out.dimension = collection.dimension;
  out.standardized = true;
  out.distributions.reserve(collection.size());
  for (const auto& dist : collection.distributions) {
    EmpiricalDistribution scaled;
    scaled.id = dist.id;
    scaled.samples = (dist.samples.rowwise() - params.center.transpose()).array().rowwise() /
                     params.scale.transpose().array();
    out.distributions.push_back(std::move(scaled));
  }
  return out;
}

DistributionCollection standardize(const DistributionCollection& collection) {
  return apply_standardization(collection, compute_standardization(collection));
}

}  // namespace npt
