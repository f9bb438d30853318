#pragma once

namespace fracdiff {

/// Gamma function via the Lanczos approximation (g = 7, 9 terms).
/// Accurate to better than 1e-13 relative on the arguments used by the
/// weight formulas (Gamma(2+a), Gamma(4-a) with a in (0,2]).
double gamma_fn(double x);

}  // namespace fracdiff
