#include "fracdiff/validation.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fracdiff/coeffs.hpp"
#include "fracdiff/errors.hpp"
#include "fracdiff/gamma.hpp"

namespace fracdiff {

double heat_kernel(double x, double t, double K) {
    if (!(t > 0.0)) throw DomainError("heat_kernel: t must be positive");
    if (!(K > 0.0)) throw DomainError("heat_kernel: K must be positive");
    return std::exp(-x * x / (4.0 * K * t)) /
           std::sqrt(4.0 * std::numbers::pi * K * t);
}

std::vector<double> classical_theta_step(std::span<const double> C, double r,
                                         double sigma, double gL_half,
                                         double gR_half) {
    const int n = static_cast<int>(C.size()) - 1;
    if (n < 2) throw ShapeError("classical_theta_step: need at least 3 nodes");

    std::vector<double> next(C.size());
    next.front() = gL_half;
    next.back() = gR_half;

    const double ex = sigma * r;        // explicit stencil weight
    const double im = (1.0 - sigma) * r;  // implicit stencil weight

    // RHS: old-time stencil plus known new-time boundary contributions.
    std::vector<double> rhs(static_cast<std::size_t>(n - 1));
    for (int i = 1; i <= n - 1; ++i) {
        double v = C[static_cast<std::size_t>(i)] +
                   ex * (C[static_cast<std::size_t>(i - 1)] -
                         2.0 * C[static_cast<std::size_t>(i)] +
                         C[static_cast<std::size_t>(i + 1)]);
        if (i == 1) v += im * gL_half;
        if (i == n - 1) v += im * gR_half;
        rhs[static_cast<std::size_t>(i - 1)] = v;
    }

    // Thomas algorithm on the interior tridiagonal system
    // (1 + 2 im) on the diagonal, -im off-diagonal.
    const int m = n - 1;
    std::vector<double> cp(static_cast<std::size_t>(m), 0.0);
    std::vector<double> dp(static_cast<std::size_t>(m), 0.0);
    const double diag = 1.0 + 2.0 * im;
    const double off = -im;
    cp[0] = off / diag;
    dp[0] = rhs[0] / diag;
    for (int i = 1; i < m; ++i) {
        const double denom = diag - off * cp[static_cast<std::size_t>(i - 1)];
        cp[static_cast<std::size_t>(i)] = off / denom;
        dp[static_cast<std::size_t>(i)] =
            (rhs[static_cast<std::size_t>(i)] -
             off * dp[static_cast<std::size_t>(i - 1)]) /
            denom;
    }
    next[static_cast<std::size_t>(m)] = dp[static_cast<std::size_t>(m - 1)];
    for (int i = m - 2; i >= 0; --i)
        next[static_cast<std::size_t>(i + 1)] =
            dp[static_cast<std::size_t>(i)] -
            cp[static_cast<std::size_t>(i)] * next[static_cast<std::size_t>(i + 2)];
    return next;
}

double oracle_value(OracleFunction f, double x) {
    switch (f) {
        case OracleFunction::Gaussian:
            return std::exp(-x * x);
        case OracleFunction::Sech2: {
            const double s = 1.0 / std::cosh(x);
            return s * s;
        }
        case OracleFunction::Bump:
            if (std::abs(x) >= 1.0) return 0.0;
            return std::exp(-1.0 / (1.0 - x * x));
    }
    return 0.0;
}

double oracle_second_derivative(OracleFunction f, double x) {
    switch (f) {
        case OracleFunction::Gaussian:
            return (4.0 * x * x - 2.0) * std::exp(-x * x);
        case OracleFunction::Sech2: {
            const double s = 1.0 / std::cosh(x);
            const double th = std::tanh(x);
            return 4.0 * s * s * th * th - 2.0 * s * s * s * s;
        }
        case OracleFunction::Bump: {
            if (std::abs(x) >= 1.0) return 0.0;
            const double d = 1.0 - x * x;
            const double fp = -2.0 * x / (d * d);
            const double fpp = (-2.0 - 6.0 * x * x) / (d * d * d);
            return (fpp + fp * fp) * std::exp(-1.0 / d);
        }
    }
    return 0.0;
}

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1].
constexpr double kKronrodNodes[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898, 0.0,                0.207784955007898,
    0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};
constexpr double kKronrodWeights[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728, 0.204432940075298,
    0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
constexpr double kGaussWeights[7] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469, 0.381830050505119, 0.279705391489277,
    0.129484966168870};

template <typename F>
void gk15(const F& f, double a, double b, double& value, double& error) {
    const double c = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    double k = 0.0;
    double g = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double fv = f(c + hw * kKronrodNodes[i]);
        k += kKronrodWeights[i] * fv;
        if (i % 2 == 1) g += kGaussWeights[i / 2] * fv;
    }
    value = k * hw;
    error = std::abs((k - g) * hw);
}

template <typename F>
double adaptive_gk(const F& f, double a, double b, double abs_tol, int depth) {
    if (depth > 48)
        throw ConvergenceError("weyl_quadrature_oracle: refinement stalled on [" +
                               std::to_string(a) + ", " + std::to_string(b) + "]");
    double value = 0.0;
    double error = 0.0;
    gk15(f, a, b, value, error);
    if (error <= abs_tol) return value;
    const double c = 0.5 * (a + b);
    return adaptive_gk(f, a, c, 0.5 * abs_tol, depth + 1) +
           adaptive_gk(f, c, b, 0.5 * abs_tol, depth + 1);
}

}  // namespace

double weyl_quadrature_oracle(OracleFunction f, double x, double alpha,
                              double theta, double rel_tol) {
    if (!(alpha > 1.0 && alpha <= 2.0))
        throw DomainError("weyl_quadrature_oracle: alpha must lie in (1,2]");
    if (alpha == 2.0) return oracle_second_derivative(f, x);

    const auto [cL, cR] = feller_pair(alpha, theta);
    const double mu = 2.0 - alpha;

    // D u(x) = -(1/Gamma(mu)) int_0^inf s^{mu-1} [cL u''(x-s) + cR u''(x+s)] ds.
    // Substituting s = t^{1/mu} removes the endpoint singularity:
    //   = -(1/Gamma(mu+1)) int_0^inf [cL u''(x - t^{1/mu}) + cR u''(x + t^{1/mu})] dt.
    const double decay_radius =
        f == OracleFunction::Bump ? 1.5 : (f == OracleFunction::Sech2 ? 45.0 : 10.0);
    const double s_max = std::abs(x) + decay_radius;
    const double t_max = std::pow(s_max, mu);

    const auto integrand = [&](double t) {
        const double s = std::pow(t, 1.0 / mu);
        return cL * oracle_second_derivative(f, x - s) +
               cR * oracle_second_derivative(f, x + s);
    };

    double rough = 0.0;
    double rough_err = 0.0;
    gk15(integrand, 0.0, t_max, rough, rough_err);
    const double abs_tol = rel_tol * std::max(std::abs(rough), 1e-10);

    const double integral = adaptive_gk(integrand, 0.0, t_max, abs_tol, 0);
    return -integral / gamma_fn(mu + 1.0);
}

FieldDifference compare_fields(std::span<const double> a,
                               std::span<const double> b, double h) {
    if (a.size() != b.size())
        throw ShapeError("compare_fields: length mismatch");
    double sq = 0.0;
    double mx = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sq += d * d;
        mx = std::max(mx, std::abs(d));
    }
    return {std::sqrt(h * sq), mx};
}

double total_mass(std::span<const double> values, double h) {
    if (values.size() < 2) throw ShapeError("total_mass: need at least 2 nodes");
    double sum = 0.5 * (values.front() + values.back());
    for (std::size_t i = 1; i + 1 < values.size(); ++i) sum += values[i];
    return h * sum;
}

double center_of_mass(std::span<const double> values, const SpatialGrid& grid) {
    if (static_cast<int>(values.size()) != grid.N + 1)
        throw ShapeError("center_of_mass: length mismatch");
    double num = 0.0;
    double den = 0.0;
    for (int i = 0; i <= grid.N; ++i) {
        num += grid.node(i) * values[static_cast<std::size_t>(i)];
        den += values[static_cast<std::size_t>(i)];
    }
    if (den == 0.0) throw DomainError("center_of_mass: zero total");
    return num / den;
}

double tail_mass(std::span<const double> values, const SpatialGrid& grid,
                 double q) {
    if (static_cast<int>(values.size()) != grid.N + 1)
        throw ShapeError("tail_mass: length mismatch");
    if (!(q > 0.0 && q < 1.0)) throw DomainError("tail_mass: q must lie in (0,1)");
    const double c = 0.5 * (grid.L + grid.R);
    const double half = 0.5 * q * (grid.R - grid.L);
    double out = 0.0;
    double tot = 0.0;
    for (int i = 0; i <= grid.N; ++i) {
        const double wt = (i == 0 || i == grid.N) ? 0.5 : 1.0;
        const double m = wt * values[static_cast<std::size_t>(i)];
        tot += m;
        if (std::abs(grid.node(i) - c) > half) out += m;
    }
    if (tot == 0.0) throw DomainError("tail_mass: zero total");
    return out / tot;
}

double symmetry_defect(std::span<const double> values) {
    double mx = 0.0;
    const std::size_t n = values.size();
    for (std::size_t i = 0; i < n; ++i)
        mx = std::max(mx, std::abs(values[i] - values[n - 1 - i]));
    return mx;
}

}  // namespace fracdiff
