#include "core/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>

#include "core/error.hpp"
#include "core/format.hpp"

namespace npt {
namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

double parse_csv_number(const std::string& cell, std::size_t line_number,
                        const std::string& column_name) {
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
  while (end > begin && (end[-1] == ' ' || end[-1] == '\t')) --end;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || begin == end)
    throw IoError("line " + std::to_string(line_number) + ", column '" + column_name +
                  "': cannot parse numeric cell '" + cell + "'");
  if (!std::isfinite(value))
    throw ValidationError("line " + std::to_string(line_number) + ", column '" +
                          column_name + "': non-finite value '" + cell + "'");
  return value;
}

DistributionCollection load_collection(const std::string& path, const CsvSchema& schema) {
  auto in = open_input(path);
  std::string line;
  if (!std::getline(in, line)) throw IoError("'" + path + "': empty file");
  strip_cr(line);
  const std::vector<std::string> header = split_csv_line(line);

  std::size_t id_index = 0;
  if (!schema.id_column.empty()) {
    const auto it = std::find(header.begin(), header.end(), schema.id_column);
    if (it == header.end())
      throw ValidationError("'" + path + "': id column '" + schema.id_column +
                            "' not found in header");
    id_index = static_cast<std::size_t>(it - header.begin());
  } else {
    const auto it = std::find(header.begin(), header.end(), "id");
    id_index = it == header.end() ? 0 : static_cast<std::size_t>(it - header.begin());
  }
  std::vector<std::size_t> value_indices;
  for (std::size_t c = 0; c < header.size(); ++c)
    if (c != id_index) value_indices.push_back(c);
  if (value_indices.empty())
    throw ValidationError("'" + path + "': no coordinate columns besides the id column");

  // Grouped rows, first-appearance order.
  std::vector<std::string> ids;
  std::map<std::string, std::vector<std::vector<double>>> groups;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    strip_cr(line);
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != header.size())
      throw IoError("line " + std::to_string(line_number) + ": expected " +
                    std::to_string(header.size()) + " fields, found " +
                    std::to_string(fields.size()));
    const std::string& id = fields[id_index];
    auto [it, inserted] = groups.try_emplace(id);
    if (inserted) ids.push_back(id);
    std::vector<double> row(value_indices.size());
    for (std::size_t c = 0; c < value_indices.size(); ++c)
      row[c] = parse_csv_number(fields[value_indices[c]], line_number,
                                header[value_indices[c]]);
    it->second.push_back(std::move(row));
  }
  if (ids.empty()) throw ValidationError("'" + path + "': no data rows");

  DistributionCollection collection;
  collection.dimension = static_cast<Eigen::Index>(value_indices.size());
  for (const auto& id : ids) {
    const auto& rows = groups[id];
    if (rows.size() < 2)
      throw ValidationError("distribution '" + id + "' has " + std::to_string(rows.size()) +
                            " realization(s); at least 2 are required");
    EmpiricalDistribution dist;
    dist.id = id;
    dist.samples.resize(static_cast<Eigen::Index>(rows.size()), collection.dimension);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < rows[r].size(); ++c)
        dist.samples(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    collection.distributions.push_back(std::move(dist));
  }
  validate_collection(collection);
  return collection;
}

void write_collection_csv(const DistributionCollection& collection, const std::string& path) {
  validate_collection(collection);
  auto out = open_output(path);
  out << "id";
  for (Eigen::Index j = 0; j < collection.dimension; ++j) out << ",x" << (j + 1);
  out << '\n';
  for (const auto& dist : collection.distributions) {
    for (Eigen::Index k = 0; k < dist.sample_count(); ++k) {
      out << dist.id;
      for (Eigen::Index j = 0; j < collection.dimension; ++j)
        out << ',' << format_double(dist.samples(k, j));
      out << '\n';
    }
  }
  if (!out) throw IoError("failed writing '" + path + "'");
}

void write_matrix_csv(const DistanceMatrix& matrix, const std::string& path) {
  validate_distance_matrix(matrix);
  auto out = open_output(path);
  out << matrix.metric_name;
  for (const auto& label : matrix.labels) out << ',' << label;
  out << '\n';
  for (Eigen::Index i = 0; i < matrix.values.rows(); ++i) {
    out << matrix.labels[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < matrix.values.cols(); ++j)
      out << ',' << format_double(matrix.values(i, j));
    out << '\n';
  }
  if (!out) throw IoError("failed writing '" + path + "'");
}

DistanceMatrix read_matrix_csv(const std::string& path) {
  auto in = open_input(path);
  std::string line;
  if (!std::getline(in, line)) throw IoError("'" + path + "': empty file");
  strip_cr(line);
  const std::vector<std::string> header = split_csv_line(line);
  if (header.size() < 2)
    throw IoError("'" + path + "': not a square distance matrix");
  DistanceMatrix matrix;
  matrix.metric_name = header.front().empty() ? "loaded" : header.front();
  matrix.labels.assign(header.begin() + 1, header.end());
  const auto n = static_cast<Eigen::Index>(matrix.labels.size());
  matrix.values.resize(n, n);
  Eigen::Index row = 0;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    strip_cr(line);
    if (line.empty()) continue;
    if (row >= n)
      throw IoError("'" + path + "': more rows than header labels");
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != static_cast<std::size_t>(n) + 1)
      throw IoError("line " + std::to_string(line_number) + ": expected " +
                    std::to_string(n + 1) + " fields, found " +
                    std::to_string(fields.size()));
    if (fields.front() != matrix.labels[static_cast<std::size_t>(row)])
      throw IoError("line " + std::to_string(line_number) + ": row label '" +
                    fields.front() + "' does not match header order");
    for (Eigen::Index j = 0; j < n; ++j)
      matrix.values(row, j) = parse_csv_number(fields[static_cast<std::size_t>(j) + 1],
                                               line_number,
                                               matrix.labels[static_cast<std::size_t>(j)]);
    ++row;
  }
  if (row != n) throw IoError("'" + path + "': fewer rows than header labels");
  validate_distance_matrix(matrix);
  return matrix;
}

CovariateTable read_covariates_csv(const std::string& path) {
  auto in = open_input(path);
  std::string line;
  if (!std::getline(in, line)) throw IoError("'" + path + "': empty file");
  strip_cr(line);
  std::vector<std::string> header = split_csv_line(line);
  if (header.size() < 2)
    throw ValidationError("'" + path + "': covariate file needs an id column plus data");
  const auto id_it = std::find(header.begin(), header.end(), "id");
  const std::size_t id_index =
      id_it == header.end() ? 0 : static_cast<std::size_t>(id_it - header.begin());

  CovariateTable table;
  for (std::size_t c = 0; c < header.size(); ++c)
    if (c != id_index) table.columns.push_back(header[c]);
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    strip_cr(line);
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != header.size())
      throw IoError("line " + std::to_string(line_number) + ": expected " +
                    std::to_string(header.size()) + " fields, found " +
                    std::to_string(fields.size()));
    std::vector<std::string> values;
    for (std::size_t c = 0; c < fields.size(); ++c)
      if (c != id_index) values.push_back(fields[c]);
    table.rows[fields[id_index]] = std::move(values);
  }
  return table;
}

}  // namespace npt
