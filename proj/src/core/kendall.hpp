#pragma once

#include <span>

namespace npt {

// Kendall's tau-a: sign-product pair statistic; tied pairs contribute zero.
// Dispatches to the O(n log n) inversion-count path when both inputs are
// tie-free and to the literal O(n^2) sum otherwise. Both paths accumulate the
// same integer numerator, so they agree bit-for-bit on tie-free data.
double kendall_tau(std::span<const double> x, std::span<const double> y);

// Literal O(n^2) evaluation of the sign-product sum.
double kendall_tau_direct(std::span<const double> x, std::span<const double> y);

// Merge-sort inversion-count path; valid only when both inputs are tie-free.
double kendall_tau_tiefree_fast(std::span<const double> x, std::span<const double> y);

// sin(pi * tau / 2): maps rank correlation to latent Gaussian correlation.
double tau_to_latent_rho(double tau);

}  // namespace npt
