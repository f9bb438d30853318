#include "fracdiff/grid.hpp"

#include <string>

#include "fracdiff/errors.hpp"

namespace fracdiff {

SpatialGrid SpatialGrid::make(double L, double R, int N) {
    if (!(R > L))
        throw DomainError("grid: R must exceed L, got [" + std::to_string(L) +
                          ", " + std::to_string(R) + "]");
    if (N < 3) throw DomainError("grid: N must be >= 3, got " + std::to_string(N));
    return {L, R, N, (R - L) / static_cast<double>(N)};
}

}  // namespace fracdiff
