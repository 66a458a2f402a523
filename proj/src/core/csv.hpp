#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/matrix.hpp"
#include "core/types.hpp"

namespace npt {

// Column mapping for long-format ingestion. An empty id_column means "a
// column named 'id' if the header has one, else the first column". All
// remaining columns are numeric coordinates, in header order.
struct CsvSchema {
  std::string id_column;
};

// One row per realization; rows grouped by id preserving row order within
// groups and first-appearance order across groups. Unparseable or missing
// numeric cells fail with the offending line and column named; groups with
// fewer than 2 rows fail citing the id.
DistributionCollection load_collection(const std::string& path,
                                       const CsvSchema& schema = {});

// Header id,x1..xd; the standard ingestion format (round-trips).
void write_collection_csv(const DistributionCollection& collection,
                          const std::string& path);

// Square matrix with a header row/column of ids; the corner cell carries the
// metric name.
void write_matrix_csv(const DistanceMatrix& matrix, const std::string& path);
DistanceMatrix read_matrix_csv(const std::string& path);

// Covariate table keyed by id; values kept as strings to preserve formatting.
struct CovariateTable {
  std::vector<std::string> columns;
  std::unordered_map<std::string, std::vector<std::string>> rows;
};

CovariateTable read_covariates_csv(const std::string& path);

// Shared low-level helpers.
std::vector<std::string> split_csv_line(const std::string& line);
double parse_csv_number(const std::string& cell, std::size_t line_number,
                        const std::string& column_name);

}  // namespace npt
