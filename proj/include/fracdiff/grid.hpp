#pragma once

#include <vector>

namespace fracdiff {

/// Uniform spatial grid on [L, R] with N subintervals (N+1 nodes).
struct SpatialGrid {
    double L;
    double R;
    int N;
    double h;

    static SpatialGrid make(double L, double R, int N);

    double node(int i) const { return L + h * static_cast<double>(i); }
};

/// Field values at all N+1 nodes at one time level.
struct FieldState {
    std::vector<double> values;
    double time = 0.0;
};

}  // namespace fracdiff
