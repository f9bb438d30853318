#pragma once

#include <vector>

namespace fracdiff {

/// Row-major dense square matrix.
struct DenseMatrix {
    int n = 0;
    std::vector<double> a;  // n*n entries, row-major

    explicit DenseMatrix(int dim)
        : n(dim), a(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0.0) {}

    double& at(int i, int j) {
        return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(j)];
    }
    double at(int i, int j) const {
        return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(j)];
    }
};

/// Combined L/U storage with the pivot permutation. Immutable after
/// factorization; concurrent solves against shared factors are safe.
struct LUFactors {
    int n = 0;
    std::vector<double> lu;
    std::vector<int> pivots;  // row swapped with k at elimination step k
};

/// P*A = L*U with partial pivoting. Throws SingularMatrixError when a
/// pivot falls below 1e-14 relative to the largest entry of A.
LUFactors lu_factor(const DenseMatrix& A);

/// Solves A*x = b using the factorization.
std::vector<double> lu_solve(const LUFactors& f, const std::vector<double>& b);

}  // namespace fracdiff
