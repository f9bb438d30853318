#include "fracdiff/linsolve.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "fracdiff/errors.hpp"

namespace fracdiff {

LUFactors lu_factor(const DenseMatrix& A) {
    const int n = A.n;
    if (n < 1) throw ShapeError("lu_factor: empty matrix");

    double amax = 0.0;
    for (double v : A.a) {
        if (!std::isfinite(v)) throw DomainError("lu_factor: non-finite entry");
        amax = std::max(amax, std::abs(v));
    }
    const double pivot_floor = 1e-14 * amax;

    LUFactors f;
    f.n = n;
    f.lu = A.a;
    f.pivots.resize(static_cast<std::size_t>(n));
    auto lu = [&f, n](int i, int j) -> double& {
        return f.lu[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(j)];
    };

    for (int k = 0; k < n; ++k) {
        int p = k;
        double best = std::abs(lu(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double m = std::abs(lu(i, k));
            if (m > best) {
                best = m;
                p = i;
            }
        }
        if (best <= pivot_floor)
            throw SingularMatrixError("lu_factor: pivot " + std::to_string(best) +
                                      " below threshold at column " +
                                      std::to_string(k));
        f.pivots[static_cast<std::size_t>(k)] = p;
        if (p != k)
            for (int j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));

        const double inv_piv = 1.0 / lu(k, k);
        for (int i = k + 1; i < n; ++i) {
            const double m = lu(i, k) * inv_piv;
            lu(i, k) = m;
            if (m != 0.0)
                for (int j = k + 1; j < n; ++j) lu(i, j) -= m * lu(k, j);
        }
    }
    return f;
}

std::vector<double> lu_solve(const LUFactors& f, const std::vector<double>& b) {
    const int n = f.n;
    if (static_cast<int>(b.size()) != n)
        throw ShapeError("lu_solve: rhs length " + std::to_string(b.size()) +
                         " != " + std::to_string(n));
    std::vector<double> x = b;
    auto lu = [&f, n](int i, int j) {
        return f.lu[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(j)];
    };

    // the factorization swaps full rows, so the rhs must be permuted up
    // front before the clean triangular solves
    for (int k = 0; k < n; ++k) {
        const int p = f.pivots[static_cast<std::size_t>(k)];
        if (p != k) std::swap(x[static_cast<std::size_t>(k)], x[static_cast<std::size_t>(p)]);
    }
    for (int k = 0; k < n; ++k)
        for (int i = k + 1; i < n; ++i)
            x[static_cast<std::size_t>(i)] -= lu(i, k) * x[static_cast<std::size_t>(k)];
    for (int i = n - 1; i >= 0; --i) {
        double acc = x[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            acc -= lu(i, j) * x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(i)] = acc / lu(i, i);
    }
    return x;
}

}  // namespace fracdiff
