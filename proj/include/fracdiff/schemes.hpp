#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fracdiff/coeffs.hpp"
#include "fracdiff/grid.hpp"
#include "fracdiff/linsolve.hpp"

namespace fracdiff {

/// Time-stepping configuration. sigma = 1 is the explicit scheme,
/// sigma = 0 fully implicit, 0.5 the trapezoidal blend.
struct SchemeConfig {
    double sigma = 1.0;
    double dt = 0.0;  ///< <= 0 means "auto": 0.9 * max_stable_dt
    double t_end = 0.0;
};

struct BoundaryConditions {
    std::function<double(double)> left;
    std::function<double(double)> right;
};

using InitialCondition = std::function<double(double)>;

/// Largest positive explicit step from the positivity of p_0:
///   dt_max = h^alpha Gamma(4-alpha) / (K_a (2^{3-alpha} - 4)(cL + cR)).
double max_stable_dt(const FractionalParams& params, double h);

/// One explicit step on an unbounded window with zero extension outside;
/// offsets truncated at |k| <= cutoff.
std::vector<double> explicit_step_pure(std::span<const double> u,
                                       const FractionalParams& params,
                                       double dt, double h, int cutoff);

/// One explicit step on the bounded domain. Boundary nodes are set to the
/// Dirichlet data sampled at the half step t + dt/2.
FieldState explicit_step_bounded(const FieldState& C, const SpatialGrid& grid,
                                 const FractionalParams& params,
                                 const WeightTable& table,
                                 const BoundaryConditions& bc, double dt);

/// System matrix of the sigma scheme: rows 0 and N are identity, interior
/// row i carries delta_ij + a_{j-i} with a_m = (sigma-1) K_a (dt/h^a) w_m.
DenseMatrix assemble_system(const SpatialGrid& grid,
                            const FractionalParams& params,
                            const WeightTable& table, double sigma, double dt);

/// Right-hand side of the sigma scheme at the step starting from C.
std::vector<double> assemble_rhs(const FieldState& C, const SpatialGrid& grid,
                                 const FractionalParams& params,
                                 const WeightTable& table,
                                 const BoundaryConditions& bc, double sigma,
                                 double dt);

/// Assembled and factorized sigma-scheme system, reusable across steps
/// (the matrix is time-independent).
struct SigmaSystem {
    LUFactors factors;
    double sigma;
    double dt;
};

SigmaSystem prepare_sigma_system(const SpatialGrid& grid,
                                 const FractionalParams& params,
                                 const WeightTable& table, double sigma,
                                 double dt);

/// One step of the sigma scheme using the cached factorization.
FieldState sigma_step(const FieldState& C, const SpatialGrid& grid,
                      const FractionalParams& params, const WeightTable& table,
                      const BoundaryConditions& bc, const SigmaSystem& system);

struct RunRequest {
    SpatialGrid grid;
    FractionalParams params;
    SchemeConfig scheme;
    InitialCondition ic;
    BoundaryConditions bc;
    std::vector<double> snapshot_times;
};

struct RunResult {
    std::vector<FieldState> snapshots;    ///< actual times in FieldState::time
    std::vector<double> requested_times;
    double dt;       ///< resolved step
    double dt_max;   ///< explicit stability bound for these parameters
    std::vector<std::string> warnings;
};

/// Seeds the initial condition at every node, steps to each snapshot time
/// (rounded to the nearest step multiple) and collects the snapshots.
RunResult run_simulation(const RunRequest& request);

}  // namespace fracdiff
