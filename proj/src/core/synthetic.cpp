#include "core/synthetic.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "core/error.hpp"
#include "core/format.hpp"
#include "core/parallel.hpp"

namespace npt {

CorrelationMatrix toeplitz_correlation(double rho, Eigen::Index d) {
  if (!(std::abs(rho) < 1.0))
    throw ValidationError("toeplitz_correlation: |rho| must be < 1");
  if (d < 1) throw ValidationError("toeplitz_correlation: dimension must be >= 1");
  Eigen::MatrixXd entries(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index k = 0; k < d; ++k)
      entries(j, k) = std::pow(rho, static_cast<double>(std::abs(j - k)));
  return CorrelationMatrix{std::move(entries)};
}

double marginal_transform(double z, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw ValidationError("marginal_transform: lambda outside [0, 1]");
  double value = 0.0;
  if (lambda < 1.0) value += (1.0 - lambda) * std::exp(0.6 * z);
  if (lambda > 0.0) {
    // log(1 + 0.8 e^z) = z + log(0.8 + e^{-z}) for large z.
    const double log_term =
        z > 30.0 ? z + std::log(0.8 + std::exp(-z)) : std::log1p(0.8 * std::exp(z));
    value += lambda * 0.8 * log_term;
  }
  return value;
}

EmpiricalDistribution sample_npn(const NpnSpec& spec) {
  if (!(std::abs(spec.rho) < 1.0))
    throw ValidationError("sample_npn: |rho| must be < 1");
  if (!(spec.lambda >= 0.0 && spec.lambda <= 1.0))
    throw ValidationError("sample_npn: lambda outside [0, 1]");
  if (spec.dimension < 1) throw ValidationError("sample_npn: dimension must be >= 1");
  if (spec.sample_count < 1) throw ValidationError("sample_npn: need at least 1 sample");

  const CorrelationMatrix latent = toeplitz_correlation(spec.rho, spec.dimension);
  Eigen::LLT<Eigen::MatrixXd> llt(latent.entries);
  if (llt.info() != Eigen::Success)
    throw NumericError("sample_npn: Cholesky factorization failed");
  const Eigen::MatrixXd chol = llt.matrixL();

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  EmpiricalDistribution dist;
  dist.samples.resize(spec.sample_count, spec.dimension);
  Eigen::VectorXd noise(spec.dimension);
  for (Eigen::Index k = 0; k < spec.sample_count; ++k) {
    for (Eigen::Index j = 0; j < spec.dimension; ++j) noise(j) = gauss(rng);
    const Eigen::VectorXd z = chol * noise;
    for (Eigen::Index j = 0; j < spec.dimension; ++j)
      dist.samples(k, j) = marginal_transform(z(j), spec.lambda);
  }
  return dist;
}

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 1) throw ValidationError("linspace: count must be >= 1");
  std::vector<double> out(static_cast<std::size_t>(count));
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = lo + step * i;
  out.back() = hi;
  return out;
}

SimulationGrid make_grid(double rho_min, double rho_max, int rho_count,
                         double lambda_min, double lambda_max, int lambda_count,
                         Eigen::Index sample_count, Eigen::Index dimension,
                         std::uint64_t base_seed) {
  if (std::abs(rho_min) >= 1.0 || std::abs(rho_max) >= 1.0)
    throw ValidationError("grid: |rho| bounds must be < 1");
  if (lambda_min < 0.0 || lambda_max > 1.0 || lambda_min > lambda_max)
    throw ValidationError("grid: lambda bounds must satisfy 0 <= lo <= hi <= 1");
  if (sample_count < 2)
    throw ValidationError("grid: need at least 2 samples per distribution");
  SimulationGrid grid;
  grid.rho_values = linspace(rho_min, rho_max, rho_count);
  grid.lambda_values = linspace(lambda_min, lambda_max, lambda_count);
  grid.sample_count = sample_count;
  grid.dimension = dimension;
  grid.base_seed = base_seed;
  return grid;
}

std::string grid_cell_id(std::size_t index, double rho, double lambda) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "g%03zu_rho%+.3f_lam%.3f", index, rho, lambda);
  return buf;
}

DistributionCollection generate_grid(const SimulationGrid& grid) {
  if (grid.rho_values.empty() || grid.lambda_values.empty())
    throw ValidationError("generate_grid: empty grid");
  const std::size_t cells = grid.cell_count();
  DistributionCollection collection;
  collection.dimension = grid.dimension;
  collection.distributions.resize(cells);

  // Each cell carries its own derived seed, so generation order is free.
  parallel_chunks(cells, 0, [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const std::size_t r = idx / grid.lambda_values.size();
      const std::size_t c = idx % grid.lambda_values.size();
      NpnSpec spec;
      spec.rho = grid.rho_values[r];
      spec.lambda = grid.lambda_values[c];
      spec.dimension = grid.dimension;
      spec.sample_count = grid.sample_count;
      spec.seed = grid.base_seed + idx;
      EmpiricalDistribution dist = sample_npn(spec);
      dist.id = grid_cell_id(idx, spec.rho, spec.lambda);
      collection.distributions[idx] = std::move(dist);
    }
  });
  validate_collection(collection);
  return collection;
}

void write_grid_covariates_csv(const SimulationGrid& grid, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << "id,rho,lambda\n";
  std::size_t idx = 0;
  for (const double rho : grid.rho_values) {
    for (const double lambda : grid.lambda_values) {
      out << grid_cell_id(idx, rho, lambda) << ',' << format_double(rho) << ','
          << format_double(lambda) << '\n';
      ++idx;
    }
  }
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace npt
