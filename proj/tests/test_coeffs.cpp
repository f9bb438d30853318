#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "fracdiff/coeffs.hpp"
#include "fracdiff/errors.hpp"
#include "fracdiff/gamma.hpp"

using namespace fracdiff;

TEST_CASE("gamma function accuracy on the working range") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(4.0) == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
    // Gamma(2.5) = 3 sqrt(pi) / 4
    CHECK(gamma_fn(2.5) ==
          doctest::Approx(0.75 * std::sqrt(std::numbers::pi)).epsilon(1e-13));
    // recurrence Gamma(x+1) = x Gamma(x) across the solver's argument range
    for (double x = 1.0; x <= 4.0; x += 0.137)
        CHECK(gamma_fn(x + 1.0) == doctest::Approx(x * gamma_fn(x)).epsilon(1e-12));
    CHECK_THROWS_AS(gamma_fn(0.0), DomainError);
    CHECK_THROWS_AS(gamma_fn(-3.0), DomainError);
}

TEST_CASE("Feller pair values and errors") {
    const auto [cL2, cR2] = feller_pair(2.0, 0.0);
    CHECK(cL2 == -0.5);
    CHECK(cR2 == -0.5);

    // -sqrt(2)/2, high-precision evaluation of the sine ratio
    const auto [cL, cR] = feller_pair(1.5, 0.0);
    CHECK(cL == doctest::Approx(-0.70710678118654752).epsilon(1e-14));
    CHECK(cR == doctest::Approx(-0.70710678118654752).epsilon(1e-14));

    // theta -> -theta swaps the pair
    const auto p = feller_pair(1.4, 0.5);
    const auto q = feller_pair(1.4, -0.5);
    CHECK(p.cL == doctest::Approx(q.cR).epsilon(1e-15));
    CHECK(p.cR == doctest::Approx(q.cL).epsilon(1e-15));

    CHECK_THROWS_AS(feller_pair(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(feller_pair(2.5, 0.0), DomainError);
    CHECK_THROWS_AS(feller_pair(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(feller_pair(2.0, 0.1), SkewError);
    CHECK_THROWS_AS(feller_pair(1.5, 0.7), SkewError);
}

TEST_CASE("trapezoid weights of the one-sided integral") {
    // v_0 = 1/Gamma(2+order); order 1 -> 1/Gamma(3) = 0.5
    CHECK(weyl_trapezoid_weight(0, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
    // (k+1)^2 - 2k^2 + (k-1)^2 = 2 for every k >= 1
    for (int k = 1; k <= 6; ++k)
        CHECK(weyl_trapezoid_weight(k, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
    // frozen: (2^1.5 - 2)/Gamma(2.5)
    CHECK(weyl_trapezoid_weight(1, 0.5) ==
          doctest::Approx(0.62318660601362418).epsilon(1e-14));
    CHECK_THROWS_AS(weyl_trapezoid_weight(-1, 1.0), IndexError);
    CHECK_THROWS_AS(weyl_trapezoid_weight(1, 0.0), DomainError);
    CHECK_THROWS_AS(weyl_trapezoid_weight(1, 2.5), DomainError);
}

TEST_CASE("stencil weights: classical endpoint is exact") {
    CHECK(riesz_feller_weight(0, 2.0, 0.0) == -2.0);
    CHECK(riesz_feller_weight(1, 2.0, 0.0) == 1.0);
    CHECK(riesz_feller_weight(-1, 2.0, 0.0) == 1.0);
    CHECK(riesz_feller_weight(2, 2.0, 0.0) == 0.0);
    CHECK(riesz_feller_weight(-7, 2.0, 0.0) == 0.0);
}

TEST_CASE("stencil weights: frozen values at alpha = 1.5") {
    CHECK(riesz_feller_weight(0, 1.5, 0.0) ==
          doctest::Approx(-1.2463732120272484).epsilon(1e-14));
    CHECK(riesz_feller_weight(1, 1.5, 0.0) ==
          doctest::Approx(0.46939225500798843).epsilon(1e-14));
    CHECK(riesz_feller_weight(2, 1.5, 0.0) ==
          doctest::Approx(0.098912715822339537).epsilon(1e-13));
}

TEST_CASE("stencil weights: alpha -> 1+ limit table") {
    const double two_pi = 2.0 * std::numbers::pi;
    CHECK(riesz_feller_weight_alpha1_limit(0) ==
          doctest::Approx(-8.0 * std::log(2.0) / two_pi).epsilon(1e-15));
    CHECK(riesz_feller_weight_alpha1_limit(1) ==
          doctest::Approx((16.0 * std::log(2.0) - 9.0 * std::log(3.0)) / two_pi)
              .epsilon(1e-15));
    // |k| = 2 exercises the 0^0 = 1 convention in the closed form
    CHECK(riesz_feller_weight_alpha1_limit(2) ==
          doctest::Approx(0.11678794191483139).epsilon(1e-13));
    CHECK(riesz_feller_weight_alpha1_limit(3) ==
          doctest::Approx(0.040136107622598875).epsilon(1e-13));
    CHECK(riesz_feller_weight_alpha1_limit(-2) ==
          riesz_feller_weight_alpha1_limit(2));
}

TEST_CASE("stencil weights: continuity at both endpoints") {
    // toward the classical table
    for (int k = 0; k <= 4; ++k) {
        const double w = riesz_feller_weight(k, 2.0 - 1e-8, 0.0);
        const double ref = riesz_feller_weight(k, 2.0, 0.0);
        CHECK(std::abs(w - ref) < 1e-6);
    }
    // toward the alpha -> 1+ limit table
    for (int k = 0; k <= 5; ++k) {
        const double w = riesz_feller_weight(k, 1.0 + 1e-8, 0.0);
        CHECK(std::abs(w - riesz_feller_weight_alpha1_limit(k)) < 1e-4);
    }
}

TEST_CASE("stencil weights: sign pattern and symmetry") {
    for (double alpha : {1.1, 1.3, 1.5, 1.7, 1.9}) {
        for (double theta : {0.0, (2.0 - alpha) / 2.0, -(2.0 - alpha) / 2.0}) {
            CHECK(riesz_feller_weight(0, alpha, theta) < 0.0);
            // the |k| >= 2 branches are a pure one-sided fourth difference
            // and keep their sign for any admissible skew; the mixed k = +-1
            // branch can change sign near maximal |theta|, so positivity of
            // those two weights is only asserted in the symmetric case
            for (int k = 2; k <= 50; ++k) {
                CHECK(riesz_feller_weight(k, alpha, theta) > 0.0);
                CHECK(riesz_feller_weight(-k, alpha, theta) > 0.0);
            }
        }
        CHECK(riesz_feller_weight(1, alpha, 0.0) > 0.0);
        CHECK(riesz_feller_weight(-1, alpha, 0.0) > 0.0);
        // theta = 0 symmetry is exact
        for (int k = 1; k <= 20; ++k)
            CHECK(riesz_feller_weight(k, alpha, 0.0) ==
                  riesz_feller_weight(-k, alpha, 0.0));
    }
}

TEST_CASE("tail sums: closed forms") {
    // alpha = 2: virtual-node tails vanish identically
    for (int i : {1, 5, 9}) {
        const auto [sl, sr] = tail_weights(i, 10, 2.0, 0.0);
        CHECK(sl == 0.0);
        CHECK(sr == 0.0);
    }
    // frozen closed-form value
    const auto [sl1, sr1] = tail_weights(1, 10, 1.5, 0.0);
    CHECK(sl1 == doctest::Approx(0.15379435100563575).epsilon(1e-14));

    // symmetric parameters: sL_j = sR_{N-j}
    for (int j = 1; j <= 9; ++j) {
        const auto [sl, sr] = tail_weights(j, 10, 1.5, 0.0);
        const auto [sl2, sr2] = tail_weights(10 - j, 10, 1.5, 0.0);
        CHECK(sl == doctest::Approx(sr2).epsilon(1e-15));
        CHECK(sr == doctest::Approx(sl2).epsilon(1e-15));
    }

    // closed form agrees with a truncated direct sum of the weights
    const int i = 3;
    const int N = 20;
    double direct = 0.0;
    for (int k = -40000; k <= -i - 1; ++k) direct += riesz_feller_weight(k, 1.5, 0.0);
    const auto [sl, sr] = tail_weights(i, N, 1.5, 0.0);
    CHECK(sl == doctest::Approx(direct).epsilon(1e-5));

    CHECK_THROWS_AS(tail_weights(0, 10, 1.5, 0.0), IndexError);
    CHECK_THROWS_AS(tail_weights(10, 10, 1.5, 0.0), IndexError);
}

TEST_CASE("explicit coefficients p_k") {
    const FractionalParams params{2.0, 0.0, 1.0};
    const double h = 0.1;
    const double dt = h * h / 4.0;
    CHECK(p_coefficient(0, params, dt, h) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(p_coefficient(1, params, dt, h) == doctest::Approx(0.25).epsilon(1e-15));

    // partial sums tend to 1 (weight zero-sum)
    const FractionalParams frac{1.5, 0.0, 1.0};
    double prev_gap = 1.0;
    for (int M : {100, 1000, 10000}) {
        double sum = p_coefficient(0, frac, dt, h);
        for (int k = 1; k <= M; ++k)
            sum += p_coefficient(k, frac, dt, h) + p_coefficient(-k, frac, dt, h);
        const double gap = std::abs(sum - 1.0);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap < 1e-4);
}

TEST_CASE("weight table caches weights and tails") {
    const WeightTable table(1.5, 0.0, 32);
    CHECK(table.support() == 32);
    for (int k = -32; k <= 32; ++k)
        CHECK(table.w(k) == riesz_feller_weight(k, 1.5, 0.0));
    CHECK(table.w(33) == 0.0);
    for (int i = 1; i <= 31; ++i) {
        const auto [sl, sr] = tail_weights(i, 32, 1.5, 0.0);
        CHECK(table.sL(i) == sl);
        CHECK(table.sR(i) == sr);
    }
    CHECK_THROWS_AS(table.sL(0), IndexError);
    CHECK_THROWS_AS(table.sR(32), IndexError);

    const WeightTable classical(2.0, 0.0, 16);
    CHECK(classical.support() == 1);
}

TEST_CASE("params validation") {
    CHECK_NOTHROW((FractionalParams{1.5, 0.3, 1.0}.validate()));
    CHECK_THROWS_AS((FractionalParams{1.0, 0.0, 1.0}.validate()), DomainError);
    CHECK_THROWS_AS((FractionalParams{2.2, 0.0, 1.0}.validate()), DomainError);
    CHECK_THROWS_AS((FractionalParams{1.5, 0.6, 1.0}.validate()), SkewError);
    CHECK_THROWS_AS((FractionalParams{1.5, 0.0, 0.0}.validate()), DomainError);
    CHECK_THROWS_AS((FractionalParams{1.5, 0.0, -1.0}.validate()), DomainError);
}
