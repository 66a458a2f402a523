#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace npt {

// Median with the even-size convention: average of the two middle order
// statistics. Takes a copy; input order is irrelevant.
double median_of(std::vector<double> values);

// Ranks with ties assigned the average rank (1-based).
std::vector<double> average_ranks(std::span<const double> values);

double pearson_correlation(std::span<const double> x, std::span<const double> y);

// Pearson correlation of average ranks.
double spearman_correlation(std::span<const double> x, std::span<const double> y);

}  // namespace npt
