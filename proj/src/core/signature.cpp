#include "core/signature.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unordered_map>
#include <utility>

#include <nlohmann/json.hpp>

#include "core/error.hpp"
#include "core/format.hpp"
#include "core/gaussian.hpp"
#include "core/parallel.hpp"

namespace npt {
namespace {

using nlohmann::json;

constexpr int kCacheVersion = 1;

double trapezoid_sq_gap(const double* qa, const double* qb, std::size_t m) {
  double sum = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double gap = qa[k] - qb[k];
    sum += gap * gap;
  }
  const double first = (qa[0] - qb[0]) * (qa[0] - qb[0]);
  const double last = (qa[m - 1] - qb[m - 1]) * (qa[m - 1] - qb[m - 1]);
  return (sum - 0.5 * (first + last)) / static_cast<double>(m - 1);
}

void require_compatible(const DistributionSignature& a, const DistributionSignature& b) {
  if (!(a.grid == b.grid))
    throw ValidationError("npt_sq: signatures use different quantile grids");
  if (a.quantiles.cols() != b.quantiles.cols())
    throw ValidationError("npt_sq: signatures have different dimensions");
}

void validate_signature(const DistributionSignature& sig) {
  if (sig.quantiles.rows() != static_cast<Eigen::Index>(sig.grid.size()))
    throw ValidationError("signature '" + sig.id + "': quantile rows != grid size");
  if (sig.quantiles.cols() != sig.latent.dimension())
    throw ValidationError("signature '" + sig.id + "': quantile/latent dimension mismatch");
  if (!sig.quantiles.allFinite())
    throw ValidationError("signature '" + sig.id + "': non-finite quantile value");
  for (Eigen::Index j = 0; j < sig.quantiles.cols(); ++j) {
    for (Eigen::Index k = 1; k < sig.quantiles.rows(); ++k) {
      if (sig.quantiles(k, j) < sig.quantiles(k - 1, j))
        throw ValidationError("signature '" + sig.id + "': quantile vector not monotone");
    }
  }
  validate_correlation(sig.latent);
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

std::ifstream open_for_read(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

}  // namespace

std::vector<std::string> SignatureSet::labels() const {
  std::vector<std::string> out;
  out.reserve(signatures.size());
  for (const auto& sig : signatures) out.push_back(sig.id);
  return out;
}

DistributionSignature precompute_signature(const EmpiricalDistribution& dist,
                                           const QuantileGrid& grid) {
  validate_distribution(dist);
  const Eigen::Index d = dist.dimension();
  const auto m = static_cast<Eigen::Index>(grid.size());
  Eigen::MatrixXd quantiles(m, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const auto column = std::span<const double>(
        dist.samples.col(j).data(), static_cast<std::size_t>(dist.sample_count()));
    const std::vector<double> q = empirical_quantiles(column, grid);
    for (Eigen::Index k = 0; k < m; ++k) quantiles(k, j) = q[static_cast<std::size_t>(k)];
  }
  return DistributionSignature{dist.id, grid, std::move(quantiles),
                               estimate_latent_correlation(dist)};
}

SignatureSet precompute_signatures(const DistributionCollection& collection,
                                   const QuantileGrid& grid, int workers) {
  validate_collection(collection);
  SignatureSet set;
  set.grid = grid;
  set.signatures.resize(collection.size(), DistributionSignature{"", grid, {}, {}});
  const auto start = std::chrono::steady_clock::now();
  parallel_chunks(collection.size(), workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      set.signatures[i] = precompute_signature(collection.distributions[i], grid);
  });
  set.elapsed_ms = elapsed_ms_since(start);
  return set;
}

double npt_sq(const DistributionSignature& a, const DistributionSignature& b) {
  return npt_sq_parts(a, b).total();
}

NptParts npt_sq_parts(const DistributionSignature& a, const DistributionSignature& b) {
  require_compatible(a, b);
  const std::size_t m = a.grid.size();
  NptParts parts;
  for (Eigen::Index j = 0; j < a.quantiles.cols(); ++j)
    parts.marginal += trapezoid_sq_gap(a.quantiles.col(j).data(),
                                       b.quantiles.col(j).data(), m);
  parts.bures = bures_sq(a.latent.entries, b.latent.entries);
  return parts;
}

DistanceMatrix npt_distance_matrix(const SignatureSet& signatures, int workers) {
  if (signatures.size() < 2)
    throw ValidationError("npt matrix needs at least 2 signatures");
  DistanceMatrix matrix = pairwise_distance_matrix(
      signatures.labels(),
      [&](std::size_t i, std::size_t j) {
        return npt_sq(signatures.signatures[i], signatures.signatures[j]);
      },
      workers, "npt");
  matrix.precompute_ms = signatures.elapsed_ms;
  return matrix;
}

DistanceMatrix npt_distance_matrix(const DistributionCollection& collection,
                                   const QuantileGrid& grid, int workers) {
  if (!collection.standardized)
    std::fprintf(stderr,
                 "npt: warning: computing distances on an unstandardized collection; "
                 "marginal scale differences will dominate\n");
  const SignatureSet set = precompute_signatures(collection, grid, workers);
  return npt_distance_matrix(set, workers);
}

void write_signatures_json(const SignatureSet& set, const std::string& path) {
  json doc;
  doc["format"] = "npt-signatures";
  doc["version"] = kCacheVersion;
  doc["m"] = set.grid.size();
  doc["dimension"] = set.dimension();
  json records = json::array();
  for (const auto& sig : set.signatures) {
    json rec;
    rec["id"] = sig.id;
    json quantiles = json::array();
    for (Eigen::Index j = 0; j < sig.quantiles.cols(); ++j) {
      json column = json::array();
      for (Eigen::Index k = 0; k < sig.quantiles.rows(); ++k)
        column.push_back(sig.quantiles(k, j));
      quantiles.push_back(std::move(column));
    }
    rec["quantiles"] = std::move(quantiles);
    json latent = json::array();
    for (Eigen::Index r = 0; r < sig.latent.dimension(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < sig.latent.dimension(); ++c)
        row.push_back(sig.latent.entries(r, c));
      latent.push_back(std::move(row));
    }
    rec["latent"] = std::move(latent);
    records.push_back(std::move(rec));
  }
  doc["signatures"] = std::move(records);
  auto out = open_for_write(path);
  out << doc.dump(2) << '\n';
  if (!out) throw IoError("failed writing '" + path + "'");
}

SignatureSet read_signatures_json(const std::string& path) {
  auto in = open_for_read(path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw IoError("cannot parse '" + path + "': " + e.what());
  }
  try {
    if (doc.at("format") != "npt-signatures")
      throw IoError("'" + path + "' is not a signature cache");
    SignatureSet set;
    set.grid = QuantileGrid(doc.at("m").get<std::size_t>());
    const auto m = static_cast<Eigen::Index>(set.grid.size());
    for (const auto& rec : doc.at("signatures")) {
      DistributionSignature sig{rec.at("id").get<std::string>(), set.grid, {}, {}};
      const auto& quantiles = rec.at("quantiles");
      const auto d = static_cast<Eigen::Index>(quantiles.size());
      sig.quantiles.resize(m, d);
      for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index k = 0; k < m; ++k)
          sig.quantiles(k, j) = quantiles.at(j).at(k).get<double>();
      sig.latent.entries.resize(d, d);
      const auto& latent = rec.at("latent");
      for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < d; ++c)
          sig.latent.entries(r, c) = latent.at(r).at(c).get<double>();
      validate_signature(sig);
      set.signatures.push_back(std::move(sig));
    }
    return set;
  } catch (const json::exception& e) {
    throw IoError("malformed signature cache '" + path + "': " + e.what());
  }
}

void write_signatures_csv(const SignatureSet& set, const std::string& directory) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(directory, ec);
  if (ec) throw IoError("cannot create directory '" + directory + "': " + ec.message());
  const fs::path dir(directory);
  {
    auto out = open_for_write(dir / "grid.csv");
    out << "m,dimension,count\n"
        << set.grid.size() << ',' << set.dimension() << ',' << set.size() << '\n';
  }
  {
    auto out = open_for_write(dir / "quantiles.csv");
    out << "id,marginal,point,value\n";
    for (const auto& sig : set.signatures)
      for (Eigen::Index j = 0; j < sig.quantiles.cols(); ++j)
        for (Eigen::Index k = 0; k < sig.quantiles.rows(); ++k)
          out << sig.id << ',' << j << ',' << k << ','
              << format_double(sig.quantiles(k, j)) << '\n';
    if (!out) throw IoError("failed writing quantiles.csv");
  }
  {
    auto out = open_for_write(dir / "latent.csv");
    out << "id,row,col,value\n";
    for (const auto& sig : set.signatures)
      for (Eigen::Index r = 0; r < sig.latent.dimension(); ++r)
        for (Eigen::Index c = 0; c < sig.latent.dimension(); ++c)
          out << sig.id << ',' << r << ',' << c << ','
              << format_double(sig.latent.entries(r, c)) << '\n';
    if (!out) throw IoError("failed writing latent.csv");
  }
}

SignatureSet read_signatures_csv(const std::string& directory) {
  namespace fs = std::filesystem;
  const fs::path dir(directory);

  std::size_t m = 0, d = 0, count = 0;
  {
    auto in = open_for_read(dir / "grid.csv");
    std::string header, line;
    std::getline(in, header);
    if (!std::getline(in, line))
      throw IoError("grid.csv in '" + directory + "' has no data row");
    if (std::sscanf(line.c_str(), "%zu,%zu,%zu", &m, &d, &count) != 3)
      throw IoError("grid.csv in '" + directory + "' is malformed");
  }

  SignatureSet set;
  set.grid = QuantileGrid(m);
  std::vector<std::string> order;
  std::unordered_map<std::string, std::size_t> index;
  auto slot = [&](const std::string& id) -> DistributionSignature& {
    auto it = index.find(id);
    if (it == index.end()) {
      index.emplace(id, set.signatures.size());
      order.push_back(id);
      DistributionSignature sig{id, set.grid, {}, {}};
      sig.quantiles.resize(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(d));
      sig.latent.entries.resize(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
      set.signatures.push_back(std::move(sig));
      return set.signatures.back();
    }
    return set.signatures[it->second];
  };

  {
    auto in = open_for_read(dir / "quantiles.csv");
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto c1 = line.find(',');
      const auto c2 = line.find(',', c1 + 1);
      const auto c3 = line.find(',', c2 + 1);
      if (c1 == std::string::npos || c2 == std::string::npos || c3 == std::string::npos)
        throw IoError("quantiles.csv in '" + directory + "' is malformed");
      auto& sig = slot(line.substr(0, c1));
      const auto j = std::stoul(line.substr(c1 + 1, c2 - c1 - 1));
      const auto k = std::stoul(line.substr(c2 + 1, c3 - c2 - 1));
      if (j >= d || k >= m)
        throw IoError("quantiles.csv in '" + directory + "' has out-of-range indices");
      sig.quantiles(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) =
          std::stod(line.substr(c3 + 1));
    }
  }
  {
    auto in = open_for_read(dir / "latent.csv");
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto c1 = line.find(',');
      const auto c2 = line.find(',', c1 + 1);
      const auto c3 = line.find(',', c2 + 1);
      if (c1 == std::string::npos || c2 == std::string::npos || c3 == std::string::npos)
        throw IoError("latent.csv in '" + directory + "' is malformed");
      auto& sig = slot(line.substr(0, c1));
      const auto r = std::stoul(line.substr(c1 + 1, c2 - c1 - 1));
      const auto c = std::stoul(line.substr(c2 + 1, c3 - c2 - 1));
      if (r >= d || c >= d)
        throw IoError("latent.csv in '" + directory + "' has out-of-range indices");
      sig.latent.entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          std::stod(line.substr(c3 + 1));
    }
  }
  if (set.signatures.size() != count)
    throw IoError("signature bundle in '" + directory + "' lists " + std::to_string(count) +
                  " records but contains " + std::to_string(set.signatures.size()));
  for (const auto& sig : set.signatures) validate_signature(sig);
  return set;
}

}  // namespace npt
