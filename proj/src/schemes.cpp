#include "fracdiff/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracdiff/errors.hpp"
#include "fracdiff/gamma.hpp"
#include "fracdiff/operator.hpp"

namespace fracdiff {

double max_stable_dt(const FractionalParams& params, double h) {
    params.validate();
    if (!(h > 0.0)) throw DomainError("max_stable_dt: h must be positive");
    const double w0 = riesz_feller_weight(0, params.alpha, params.theta);
    // dt_max = -h^alpha / (K_a w_0); w_0 < 0 throughout the valid range.
    return -std::pow(h, params.alpha) / (params.k_alpha * w0);
}

std::vector<double> explicit_step_pure(std::span<const double> u,
                                       const FractionalParams& params,
                                       double dt, double h, int cutoff) {
    params.validate();
    if (!(dt > 0.0)) throw DomainError("explicit_step_pure: dt must be positive");
    // next_i = sum_k u_{i+k} p_k = u_i + K dt/h^a * (D u)_i
    auto applied = apply_unbounded(u, params.alpha, params.theta, h, cutoff);
    const double r = params.k_alpha * dt;
    std::vector<double> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        out[i] = u[i] + r * applied.values[i];
    return out;
}

FieldState explicit_step_bounded(const FieldState& C, const SpatialGrid& grid,
                                 const FractionalParams& params,
                                 const WeightTable& table,
                                 const BoundaryConditions& bc, double dt) {
    if (static_cast<int>(C.values.size()) != grid.N + 1)
        throw ShapeError("explicit_step_bounded: field length mismatch");
    const double t_half = C.time + 0.5 * dt;
    const double gL = bc.left(t_half);
    const double gR = bc.right(t_half);

    const auto deriv = apply_bounded(C, grid, table, gL, gR);
    const double r = params.k_alpha * dt;

    FieldState next;
    next.values.resize(C.values.size());
    next.time = C.time + dt;
    next.values.front() = gL;
    next.values.back() = gR;
    for (int i = 1; i <= grid.N - 1; ++i)
        next.values[static_cast<std::size_t>(i)] =
            C.values[static_cast<std::size_t>(i)] +
            r * deriv[static_cast<std::size_t>(i - 1)];
    return next;
}

DenseMatrix assemble_system(const SpatialGrid& grid,
                            const FractionalParams& params,
                            const WeightTable& table, double sigma, double dt) {
    if (!(sigma >= 0.0 && sigma <= 1.0))
        throw DomainError("assemble_system: sigma must lie in [0,1]");
    if (!(dt > 0.0)) throw DomainError("assemble_system: dt must be positive");
    const int N = grid.N;
    const double r = params.k_alpha * dt / std::pow(grid.h, params.alpha);

    // a_m = (sigma - 1) * r * w_m, m = -N..N
    std::vector<double> a(static_cast<std::size_t>(2 * N + 1));
    for (int m = -N; m <= N; ++m)
        a[static_cast<std::size_t>(m + N)] = (sigma - 1.0) * r * table.w(m);

    DenseMatrix A(N + 1);
    A.at(0, 0) = 1.0;
    A.at(N, N) = 1.0;
    for (int i = 1; i <= N - 1; ++i)
        for (int j = 0; j <= N; ++j)
            A.at(i, j) = (i == j ? 1.0 : 0.0) + a[static_cast<std::size_t>(j - i + N)];
    return A;
}

std::vector<double> assemble_rhs(const FieldState& C, const SpatialGrid& grid,
                                 const FractionalParams& params,
                                 const WeightTable& table,
                                 const BoundaryConditions& bc, double sigma,
                                 double dt) {
    const int N = grid.N;
    if (static_cast<int>(C.values.size()) != N + 1)
        throw ShapeError("assemble_rhs: field length mismatch");
    const double t_half = C.time + 0.5 * dt;
    const double gL = bc.left(t_half);
    const double gR = bc.right(t_half);
    const double r = params.k_alpha * dt / std::pow(grid.h, params.alpha);
    const int support = table.support();

    std::vector<double> b(static_cast<std::size_t>(N + 1));
    b.front() = gL;
    b.back() = gR;
    for (int j = 1; j <= N - 1; ++j) {
        const int klo = std::max(-j, -support);
        const int khi = std::min(N - j, support);
        double conv = 0.0;
        for (int k = klo; k <= khi; ++k)
            conv += C.values[static_cast<std::size_t>(j + k)] * table.w(k);
        b[static_cast<std::size_t>(j)] =
            C.values[static_cast<std::size_t>(j)] +
            r * (gL * table.sL(j) + gR * table.sR(j) + sigma * conv);
    }
    return b;
}

SigmaSystem prepare_sigma_system(const SpatialGrid& grid,
                                 const FractionalParams& params,
                                 const WeightTable& table, double sigma,
                                 double dt) {
    const DenseMatrix A = assemble_system(grid, params, table, sigma, dt);
    return {lu_factor(A), sigma, dt};
}

FieldState sigma_step(const FieldState& C, const SpatialGrid& grid,
                      const FractionalParams& params, const WeightTable& table,
                      const BoundaryConditions& bc, const SigmaSystem& system) {
    const auto b = assemble_rhs(C, grid, params, table, bc, system.sigma, system.dt);
    FieldState next;
    next.values = lu_solve(system.factors, b);
    next.time = C.time + system.dt;
    return next;
}

RunResult run_simulation(const RunRequest& request) {
    request.params.validate();
    const auto& grid = request.grid;
    const auto& cfg = request.scheme;
    if (!(cfg.sigma >= 0.0 && cfg.sigma <= 1.0))
        throw ConfigError("run: sigma must lie in [0,1]");
    if (!request.ic || !request.bc.left || !request.bc.right)
        throw ConfigError("run: initial and boundary conditions must be set");

    RunResult result;
    result.dt_max = max_stable_dt(request.params, grid.h);
    result.dt = cfg.dt > 0.0 ? cfg.dt : 0.9 * result.dt_max;
    result.requested_times = request.snapshot_times;

    if (cfg.sigma == 1.0 && result.dt >= result.dt_max)
        result.warnings.push_back(
            "explicit step dt = " + std::to_string(result.dt) +
            " is at or above the stability bound dt_max = " +
            std::to_string(result.dt_max));

    std::vector<long> target_steps;
    for (double t : request.snapshot_times) {
        if (t < 0.0) throw ConfigError("run: negative snapshot time");
        target_steps.push_back(std::lround(t / result.dt));
    }
    if (!std::is_sorted(target_steps.begin(), target_steps.end()))
        throw ConfigError("run: snapshot times must be non-decreasing after rounding");

    WeightTable table(request.params.alpha, request.params.theta, grid.N);

    FieldState state;
    state.values.resize(static_cast<std::size_t>(grid.N + 1));
    state.time = 0.0;
    for (int i = 0; i <= grid.N; ++i)
        state.values[static_cast<std::size_t>(i)] = request.ic(grid.node(i));

    const bool explicit_path = cfg.sigma == 1.0;
    SigmaSystem system{};
    if (!explicit_path)
        system = prepare_sigma_system(grid, request.params, table, cfg.sigma,
                                      result.dt);

    long step = 0;
    for (std::size_t s = 0; s < target_steps.size(); ++s) {
        while (step < target_steps[s]) {
            state = explicit_path
                        ? explicit_step_bounded(state, grid, request.params,
                                                table, request.bc, result.dt)
                        : sigma_step(state, grid, request.params, table,
                                     request.bc, system);
            ++step;
            state.time = static_cast<double>(step) * result.dt;
        }
        result.snapshots.push_back(state);
    }
    return result;
}

}  // namespace fracdiff
