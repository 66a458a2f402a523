#include "core/matrix.hpp"

#include <cmath>
#include <utility>

#include "core/error.hpp"
#include "core/parallel.hpp"

namespace npt {

void validate_distance_matrix(const DistanceMatrix& m) {
  const Eigen::Index n = m.values.rows();
  if (m.values.cols() != n)
    throw ValidationError("distance matrix is not square");
  if (static_cast<Eigen::Index>(m.labels.size()) != n)
    throw ValidationError("distance matrix label count mismatch");
  if (!m.values.allFinite())
    throw ValidationError("distance matrix has non-finite entries");
  const double scale = std::max(1.0, m.values.cwiseAbs().maxCoeff());
  if ((m.values - m.values.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw ValidationError("distance matrix is not symmetric");
  if (m.values.diagonal().cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw ValidationError("distance matrix diagonal is not zero");
  if (m.values.minCoeff() < 0.0)
    throw ValidationError("distance matrix has negative entries");
}

DistanceMatrix pairwise_distance_matrix(
    const std::vector<std::string>& labels,
    const std::function<double(std::size_t, std::size_t)>& fn, int workers,
    std::string metric_name) {
  const std::size_t n = labels.size();
  if (n < 2) throw ValidationError("pairwise matrix needs at least 2 distributions");

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  DistanceMatrix out;
  out.labels = labels;
  out.metric_name = std::move(metric_name);
  out.values = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                     static_cast<Eigen::Index>(n));

  const auto start = std::chrono::steady_clock::now();
  parallel_chunks(pairs.size(), workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const auto [i, j] = pairs[k];
      double value = 0.0;
      try {
        value = fn(i, j);
      } catch (const ValidationError& e) {
        throw ValidationError("pair (" + labels[i] + ", " + labels[j] + "): " + e.what());
      } catch (const NumericError& e) {
        throw NumericError("pair (" + labels[i] + ", " + labels[j] + "): " + e.what());
      }
      const auto ii = static_cast<Eigen::Index>(i);
      const auto jj = static_cast<Eigen::Index>(j);
      out.values(ii, jj) = value;
      out.values(jj, ii) = value;
    }
  });
  out.elapsed_ms = elapsed_ms_since(start);
  return out;
}

}  // namespace npt
