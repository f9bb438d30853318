#include "fracdiff/operator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracdiff/errors.hpp"
#include "fracdiff/gamma.hpp"

namespace fracdiff {

UnboundedApplyResult apply_unbounded(std::span<const double> u, double alpha,
                                     double theta, double h, int cutoff) {
    if (!(h > 0.0)) throw DomainError("apply_unbounded: h must be positive");
    const int n = static_cast<int>(u.size());
    if (cutoff < 1 || cutoff > n)
        throw CutoffError("apply_unbounded: cutoff must lie in 1..window size, got " +
                          std::to_string(cutoff));

    std::vector<double> w(static_cast<std::size_t>(2 * cutoff + 1));
    for (int k = -cutoff; k <= cutoff; ++k)
        w[static_cast<std::size_t>(k + cutoff)] =
            riesz_feller_weight(k, alpha, theta);

    const double inv_ha = 1.0 / std::pow(h, alpha);
    std::vector<double> out(u.size(), 0.0);
    for (int i = 0; i < n; ++i) {
        const int klo = std::max(-cutoff, -i);
        const int khi = std::min(cutoff, n - 1 - i);
        double acc = 0.0;
        for (int k = klo; k <= khi; ++k)
            acc += u[static_cast<std::size_t>(i + k)] *
                   w[static_cast<std::size_t>(k + cutoff)];
        out[static_cast<std::size_t>(i)] = acc * inv_ha;
    }

    // Neglected weight mass beyond the cutoff, from the closed-form tails.
    double umax = 0.0;
    for (double v : u) umax = std::max(umax, std::abs(v));
    double tail = 0.0;
    if (alpha < 2.0) {
        const auto [cL, cR] = feller_pair(alpha, theta);
        const double e = 3.0 - alpha;
        const double pre = -1.0 / gamma_fn(4.0 - alpha);
        const double m = static_cast<double>(cutoff);
        const double bracket = -std::pow(m + 2.0, e) + 3.0 * std::pow(m + 1.0, e) -
                               3.0 * std::pow(m, e) + std::pow(m - 1.0, e);
        tail = std::abs(pre * bracket * (cL + cR));
    }
    return {std::move(out), umax * tail * inv_ha};
}

std::vector<double> apply_bounded(const FieldState& C, const SpatialGrid& grid,
                                  const WeightTable& table, double gL_value,
                                  double gR_value) {
    const int N = grid.N;
    if (static_cast<int>(C.values.size()) != N + 1)
        throw ShapeError("apply_bounded: field length " +
                         std::to_string(C.values.size()) + " != N+1 = " +
                         std::to_string(N + 1));
    if (table.N() != N)
        throw ShapeError("apply_bounded: weight table built for different N");

    const double inv_ha = 1.0 / std::pow(grid.h, table.alpha());
    const int support = table.support();
    std::vector<double> out(static_cast<std::size_t>(N - 1));
    for (int i = 1; i <= N - 1; ++i) {
        const int klo = std::max(-i, -support);
        const int khi = std::min(N - i, support);
        double acc = 0.0;
        for (int k = klo; k <= khi; ++k)
            acc += C.values[static_cast<std::size_t>(i + k)] * table.w(k);
        acc += gL_value * table.sL(i) + gR_value * table.sR(i);
        out[static_cast<std::size_t>(i - 1)] = acc * inv_ha;
    }
    return out;
}

}  // namespace fracdiff
