#pragma once

#include <span>
#include <vector>

#include "fracdiff/coeffs.hpp"
#include "fracdiff/grid.hpp"

namespace fracdiff {

struct UnboundedApplyResult {
    std::vector<double> values;  ///< one entry per window node
    double tail_bound;           ///< max|u| * |sum of neglected weights| / h^alpha
};

/// Discretized fractional derivative on an unbounded grid, truncated to
/// offsets |k| <= cutoff with samples outside the window taken as zero.
/// The caller is responsible for a window that extends past the support
/// of u; the returned tail_bound quantifies the neglected weight mass.
UnboundedApplyResult apply_unbounded(std::span<const double> u, double alpha,
                                     double theta, double h, int cutoff);

/// Bounded-domain fractional derivative with Dirichlet data on virtual
/// nodes: for each interior node i = 1..N-1 returns
///   (1/h^alpha) [ sum_{k=-i}^{N-i} C_{i+k} w_k + gL*sL_i + gR*sR_i ].
/// Result has N-1 entries (interior nodes only).
std::vector<double> apply_bounded(const FieldState& C, const SpatialGrid& grid,
                                  const WeightTable& table, double gL_value,
                                  double gR_value);

}  // namespace fracdiff
