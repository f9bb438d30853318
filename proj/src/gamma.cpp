#include "fracdiff/gamma.hpp"

#include <cmath>
#include <numbers>

#include "fracdiff/errors.hpp"

namespace fracdiff {

namespace {

// Lanczos coefficients, g = 7.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

}  // namespace

double gamma_fn(double x) {
    if (std::isnan(x)) throw DomainError("gamma_fn: NaN argument");
    if (x <= 0.0 && x == std::floor(x))
        throw DomainError("gamma_fn: non-positive integer argument");

    if (x < 0.5) {
        // Reflection formula.
        return std::numbers::pi /
               (std::sin(std::numbers::pi * x) * gamma_fn(1.0 - x));
    }

    const double z = x - 1.0;
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + i);
    const double t = z + 7.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) *
           std::exp(-t) * a;
}

}  // namespace fracdiff
