#include "fracdiff/coeffs.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "fracdiff/errors.hpp"
#include "fracdiff/gamma.hpp"

namespace fracdiff {

namespace {

constexpr double kPi = std::numbers::pi;

// Log-term contribution expo*ln(base) with the convention 0*ln(0) = 0,
// i.e. 0^0 = 1 for the limit-table factors at |k| = 2.
double powlog(double base, double expo) {
    return expo == 0.0 ? 0.0 : expo * std::log(base);
}

void check_order_range(double alpha, double theta) {
    if (!(alpha > 0.0 && alpha <= 2.0) || alpha == 1.0)
        throw DomainError("feller_pair: alpha must lie in (0,2], alpha != 1, got " +
                          std::to_string(alpha));
    const double bound = std::min(alpha, 2.0 - alpha);
    if (std::abs(theta) > bound + 1e-15)
        throw SkewError("feller_pair: |theta| = " + std::to_string(std::abs(theta)) +
                        " exceeds min(alpha, 2-alpha) = " + std::to_string(bound));
}

}  // namespace

void FractionalParams::validate() const {
    if (!(alpha > 1.0 && alpha <= 2.0))
        throw DomainError("params: solver requires 1 < alpha <= 2, got " +
                          std::to_string(alpha));
    check_order_range(alpha, theta);
    if (!(k_alpha > 0.0))
        throw DomainError("params: k_alpha must be positive, got " +
                          std::to_string(k_alpha));
}

FellerPair feller_pair(double alpha, double theta) {
    check_order_range(alpha, theta);
    if (alpha == 2.0) return {-0.5, -0.5};
    if (alpha > 1.0) {
        // Reduced form around alpha = 2: with eps = 2 - alpha,
        //   sin((alpha -+ theta) pi/2) = sin((eps +- theta) pi/2),
        //   sin(alpha pi) = -sin(eps pi).
        // eps = 2 - alpha is exact in floating point, so this avoids the
        // cancellation of sin(alpha pi) near the classical endpoint.
        const double eps = 2.0 - alpha;
        const double s = -std::sin(eps * kPi);
        return {std::sin((eps + theta) * kPi / 2.0) / s,
                std::sin((eps - theta) * kPi / 2.0) / s};
    }
    const double s = std::sin(alpha * kPi);
    return {std::sin((alpha - theta) * kPi / 2.0) / s,
            std::sin((alpha + theta) * kPi / 2.0) / s};
}

double weyl_trapezoid_weight(int k, double order) {
    if (k < 0) throw IndexError("weyl_trapezoid_weight: k must be >= 0");
    if (!(order > 0.0 && order <= 2.0))
        throw DomainError("weyl_trapezoid_weight: order must lie in (0,2]");
    const double g = gamma_fn(2.0 + order);
    if (k == 0) return 1.0 / g;
    const double kk = static_cast<double>(k);
    return (std::pow(kk + 1.0, 1.0 + order) - 2.0 * std::pow(kk, 1.0 + order) +
            std::pow(kk - 1.0, 1.0 + order)) /
           g;
}

double riesz_feller_weight(int k, double alpha, double theta) {
    if (!(alpha > 1.0 && alpha <= 2.0))
        throw DomainError("riesz_feller_weight: alpha must lie in (1,2]");
    if (alpha == 2.0) {
        if (theta != 0.0) throw SkewError("riesz_feller_weight: theta must be 0 at alpha = 2");
        if (k == 0) return -2.0;
        if (k == 1 || k == -1) return 1.0;
        return 0.0;
    }
    const auto [cL, cR] = feller_pair(alpha, theta);
    const double pre = -1.0 / gamma_fn(4.0 - alpha);
    const double e = 3.0 - alpha;
    const int ak = std::abs(k);
    if (ak >= 2) {
        const double m = static_cast<double>(ak);
        const double bracket = std::pow(m + 2.0, e) - 4.0 * std::pow(m + 1.0, e) +
                               6.0 * std::pow(m, e) - 4.0 * std::pow(m - 1.0, e) +
                               std::pow(m - 2.0, e);
        return pre * bracket * (k < 0 ? cL : cR);
    }
    if (k == 0) return pre * (std::pow(2.0, e) - 4.0) * (cL + cR);
    const double edge = std::pow(3.0, e) - std::pow(2.0, e + 2.0) + 6.0;
    return k == -1 ? pre * (edge * cL + cR) : pre * (edge * cR + cL);
}

double riesz_feller_weight_alpha1_limit(int k) {
    constexpr double kTwoPi = 2.0 * kPi;
    const int ak = std::abs(k);
    if (ak == 0) return -8.0 * std::log(2.0) / kTwoPi;
    if (ak == 1) return (16.0 * std::log(2.0) - 9.0 * std::log(3.0)) / kTwoPi;
    const double m = static_cast<double>(ak);
    const double num = powlog(m + 1.0, 4.0 * (m + 1.0) * (m + 1.0)) +
                       powlog(m - 1.0, 4.0 * (m - 1.0) * (m - 1.0));
    const double den = powlog(m + 2.0, (m + 2.0) * (m + 2.0)) +
                       powlog(m, 6.0 * m * m) +
                       powlog(m - 2.0, (m - 2.0) * (m - 2.0));
    return (num - den) / kTwoPi;
}

std::pair<double, double> tail_weights(int i, int N, double alpha, double theta) {
    if (i < 1 || i > N - 1)
        throw IndexError("tail_weights: i must lie in 1..N-1, got i = " +
                         std::to_string(i) + ", N = " + std::to_string(N));
    if (!(alpha > 1.0 && alpha <= 2.0))
        throw DomainError("tail_weights: alpha must lie in (1,2]");
    const auto [cL, cR] = feller_pair(alpha, theta);
    if (alpha == 2.0) return {0.0, 0.0};
    const double pre = -1.0 / gamma_fn(4.0 - alpha);
    const double e = 3.0 - alpha;
    const auto bracket = [e](double m) {
        return -std::pow(m + 2.0, e) + 3.0 * std::pow(m + 1.0, e) -
               3.0 * std::pow(m, e) + std::pow(m - 1.0, e);
    };
    return {pre * bracket(static_cast<double>(i)) * cL,
            pre * bracket(static_cast<double>(N - i)) * cR};
}

double p_coefficient(int k, const FractionalParams& params, double dt, double h) {
    if (!(h > 0.0)) throw DomainError("p_coefficient: h must be positive");
    if (!(dt > 0.0)) throw DomainError("p_coefficient: dt must be positive");
    const double r = params.k_alpha * dt / std::pow(h, params.alpha);
    const double w = riesz_feller_weight(k, params.alpha, params.theta);
    return (k == 0 ? 1.0 : 0.0) + r * w;
}

WeightTable::WeightTable(double alpha, double theta, int N)
    : alpha_(alpha),
      theta_(theta),
      N_(N),
      pair_(feller_pair(alpha, theta)),
      support_(alpha == 2.0 ? 1 : N),
      w_(static_cast<std::size_t>(2 * N + 1)),
      sL_(static_cast<std::size_t>(N + 1), 0.0),
      sR_(static_cast<std::size_t>(N + 1), 0.0) {
    if (N < 3) throw DomainError("WeightTable: N must be >= 3");
    if (!(alpha > 1.0 && alpha <= 2.0))
        throw DomainError("WeightTable: alpha must lie in (1,2]");
    for (int k = -N; k <= N; ++k)
        w_[static_cast<std::size_t>(k + N)] = riesz_feller_weight(k, alpha, theta);
    for (int i = 1; i <= N - 1; ++i) {
        const auto [sl, sr] = tail_weights(i, N, alpha, theta);
        sL_[static_cast<std::size_t>(i)] = sl;
        sR_[static_cast<std::size_t>(i)] = sr;
    }
}

double WeightTable::sL(int i) const {
    if (i < 1 || i > N_ - 1) throw IndexError("WeightTable::sL: i outside 1..N-1");
    return sL_[static_cast<std::size_t>(i)];
}

double WeightTable::sR(int i) const {
    if (i < 1 || i > N_ - 1) throw IndexError("WeightTable::sR: i outside 1..N-1");
    return sR_[static_cast<std::size_t>(i)];
}

}  // namespace fracdiff
