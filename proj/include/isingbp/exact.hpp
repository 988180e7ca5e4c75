#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "isingbp/model.hpp"

namespace isingbp {

// Exact inference result. Pairwise tables are indexed over
// (x_i, x_j) in the order (+,+), (+,-), (-,+), (-,-) following the
// edge's stored orientation.
struct ExactSummary {
    std::vector<double> singleton_plus;             // P(x_i = +1)
    std::vector<std::array<double, 4>> pairwise;    // per edge
    double log_partition = 0.0;
};

// Sums over all 2^N states in the log domain. N <= 22.
ExactSummary brute_force(const IsingModel& model);

// Column-by-column elimination for a non-periodic rows x cols grid
// (rows <= 16). Matches brute_force where both apply.
ExactSummary transfer_matrix_grid(const IsingModel& model, int rows, int cols);

// Single-site heat-bath sweeps in fixed node order; returns empirical
// P(x_i = +1) over the sweeps after burn-in.
std::vector<double> gibbs_sample(const IsingModel& model, int sweeps, int burn_in,
                                 std::uint64_t seed);

}  // namespace isingbp
