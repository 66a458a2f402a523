#pragma once

#include <Eigen/Core>
#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace npt {

// N x N squared distances: symmetric, zero diagonal, nonnegative.
struct DistanceMatrix {
  std::vector<std::string> labels;
  Eigen::MatrixXd values;
  std::string metric_name;
  double elapsed_ms = 0.0;     // pairwise assembly wall time
  double precompute_ms = 0.0;  // per-distribution precompute wall time
};

void validate_distance_matrix(const DistanceMatrix& m);

// Fills the strict upper triangle in parallel over pair chunks, mirrors, and
// zeroes the diagonal. fn must be pure; failures are rethrown tagged with the
// offending pair of labels. Output is identical for any worker count.
DistanceMatrix pairwise_distance_matrix(
    const std::vector<std::string>& labels,
    const std::function<double(std::size_t, std::size_t)>& fn, int workers,
    std::string metric_name);

inline double elapsed_ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   start)
      .count();
}

}  // namespace npt
