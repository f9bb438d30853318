#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "fracdiff/errors.hpp"
#include "fracdiff/linsolve.hpp"

using namespace fracdiff;

namespace {

// Deterministic LCG so the "random" instances are reproducible.
struct Lcg {
    std::uint64_t state;
    double next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(state >> 11) / 9007199254740992.0;
    }
};

DenseMatrix random_diag_dominant(int n, std::uint64_t seed) {
    Lcg rng{seed};
    DenseMatrix A(n);
    for (int i = 0; i < n; ++i) {
        double row_sum = 0.0;
        for (int j = 0; j < n; ++j) {
            const double v = rng.next() - 0.5;
            A.at(i, j) = v;
            row_sum += std::abs(v);
        }
        A.at(i, i) += row_sum + 1.0;
    }
    return A;
}

std::vector<double> matvec(const DenseMatrix& A, const std::vector<double>& x) {
    std::vector<double> y(static_cast<std::size_t>(A.n), 0.0);
    for (int i = 0; i < A.n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < A.n; ++j)
            acc += A.at(i, j) * x[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = acc;
    }
    return y;
}

}  // namespace

TEST_CASE("identity factorization is trivial") {
    DenseMatrix I(5);
    for (int i = 0; i < 5; ++i) I.at(i, i) = 1.0;
    const auto f = lu_factor(I);
    for (int i = 0; i < 5; ++i) CHECK(f.pivots[static_cast<std::size_t>(i)] == i);
    const std::vector<double> b{1.0, -2.0, 3.0, 0.5, 0.0};
    CHECK(lu_solve(f, b) == b);
}

TEST_CASE("hand-checked 2x2 solve") {
    DenseMatrix A(2);
    A.at(0, 0) = 2.0;
    A.at(0, 1) = 1.0;
    A.at(1, 0) = 1.0;
    A.at(1, 1) = 3.0;
    const auto x = lu_solve(lu_factor(A), {3.0, 4.0});
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("random 50x50: residual and reconstruction") {
    const int n = 50;
    const auto A = random_diag_dominant(n, 12345);
    const auto f = lu_factor(A);

    Lcg rng{999};
    std::vector<double> b(static_cast<std::size_t>(n));
    double bmax = 0.0;
    for (auto& v : b) {
        v = rng.next() * 10.0 - 5.0;
        bmax = std::max(bmax, std::abs(v));
    }
    const auto x = lu_solve(f, b);
    const auto Ax = matvec(A, x);
    for (int i = 0; i < n; ++i)
        CHECK(std::abs(Ax[static_cast<std::size_t>(i)] -
                       b[static_cast<std::size_t>(i)]) <= 1e-10 * bmax);

    // ||P A - L U||_inf <= 1e-12 n ||A||_inf
    DenseMatrix PA(n);
    {
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
        for (int k = 0; k < n; ++k)
            std::swap(perm[static_cast<std::size_t>(k)],
                      perm[static_cast<std::size_t>(f.pivots[static_cast<std::size_t>(k)])]);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                PA.at(i, j) = A.at(perm[static_cast<std::size_t>(i)], j);
    }
    double anorm = 0.0;
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += std::abs(A.at(i, j));
        anorm = std::max(anorm, s);
    }
    const auto lu = [&f, n](int i, int j) {
        return f.lu[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(j)];
    };
    double err = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            const int kmax = std::min(i, j);
            for (int k = 0; k < kmax; ++k) acc += lu(i, k) * lu(k, j);
            acc += i <= j ? lu(i, j) : lu(i, kmax) * lu(kmax, j);
            err = std::max(err, std::abs(PA.at(i, j) - acc));
        }
    }
    CHECK(err <= 1e-12 * static_cast<double>(n) * anorm);
}

TEST_CASE("solve properties") {
    const auto A = random_diag_dominant(20, 777);
    const auto f = lu_factor(A);

    // b = 0 -> x = 0
    const auto zero = lu_solve(f, std::vector<double>(20, 0.0));
    for (double v : zero) CHECK(v == 0.0);

    // x = ones recovers b = row sums
    std::vector<double> ones(20, 1.0);
    const auto rowsums = matvec(A, ones);
    const auto back = lu_solve(f, rowsums);
    for (double v : back) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

    // repeated solves with one factorization match fresh factorizations
    Lcg rng{31337};
    for (int rep = 0; rep < 4; ++rep) {
        std::vector<double> b(20);
        for (auto& v : b) v = rng.next() - 0.5;
        const auto x1 = lu_solve(f, b);
        const auto x2 = lu_solve(lu_factor(A), b);
        for (std::size_t i = 0; i < b.size(); ++i)
            CHECK(x1[i] == doctest::Approx(x2[i]).epsilon(1e-12));
    }

    // determinism: identical inputs, bit-identical outputs
    std::vector<double> b(20, 0.3);
    CHECK(lu_solve(f, b) == lu_solve(f, b));
}

TEST_CASE("singular matrix detection") {
    DenseMatrix A(3);
    // rank-2: third row equals the sum of the first two
    const double rows[2][3] = {{1.0, 2.0, 3.0}, {4.0, 5.0, 6.0}};
    for (int j = 0; j < 3; ++j) {
        A.at(0, j) = rows[0][j];
        A.at(1, j) = rows[1][j];
        A.at(2, j) = rows[0][j] + rows[1][j];
    }
    CHECK_THROWS_AS(lu_factor(A), SingularMatrixError);

    DenseMatrix nan_mat(2);
    nan_mat.at(0, 0) = std::nan("");
    CHECK_THROWS_AS(lu_factor(nan_mat), DomainError);

    const auto good = lu_factor(random_diag_dominant(4, 1));
    CHECK_THROWS_AS(lu_solve(good, std::vector<double>(3, 0.0)), ShapeError);
}

TEST_CASE("pivoting path: dense rhs with cached factors") {
    // identity-like top row with large sub-diagonal entries forces row
    // interchanges; a dense rhs then exercises the permutation handling
    Lcg rng{17};
    const int n = 40;
    DenseMatrix A(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            A.at(i, j) = rng.next() - 0.5;
    A.at(0, 0) = 1.0;
    for (int j = 1; j < n; ++j) A.at(0, j) = 0.0;
    for (int i = 1; i < n; ++i) A.at(i, 0) = 10.0 + static_cast<double>(i);
    for (int i = 1; i < n; ++i) A.at(i, i) += 60.0;

    const auto f = lu_factor(A);
    std::vector<double> b(static_cast<std::size_t>(n));
    for (auto& v : b) v = rng.next() - 0.5;
    // repeated solves feed dense vectors back through the cached factors
    for (int round = 0; round < 3; ++round) {
        const auto x = lu_solve(f, b);
        double bnorm = 0.0;
        double rnorm = 0.0;
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j)
                s += A.at(i, j) * x[static_cast<std::size_t>(j)];
            rnorm = std::max(rnorm, std::abs(s - b[static_cast<std::size_t>(i)]));
            bnorm = std::max(bnorm, std::abs(b[static_cast<std::size_t>(i)]));
        }
        CHECK(rnorm <= 1e-11 * bnorm);
        // row 0 of A is the unit vector e_0, so x_0 must reproduce b_0
        CHECK(x[0] == doctest::Approx(b[0]).epsilon(1e-12));
        b = x;
    }
}
