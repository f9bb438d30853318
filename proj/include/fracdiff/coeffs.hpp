#pragma once

#include <utility>
#include <vector>

namespace fracdiff {

/// Parameters of the fractional diffusion problem dC/dt = K_a D^a_theta C.
struct FractionalParams {
    double alpha;    ///< derivative order, 1 < alpha <= 2 for time stepping
    double theta;    ///< skewness, |theta| <= min(alpha, 2 - alpha)
    double k_alpha;  ///< generalized diffusion coefficient [m^alpha / s], > 0

    /// Throws DomainError / SkewError on violations of the solver range.
    void validate() const;
};

struct FellerPair {
    double cL;
    double cR;
};

/// Feller coefficients c_L, c_R of the skewed fractional operator.
/// Valid for 0 < alpha <= 2, alpha != 1; at alpha = 2 returns the exact
/// limit (-1/2, -1/2).
FellerPair feller_pair(double alpha, double theta);

/// Trapezoidal weight v_k of the discretized one-sided fractional integral
/// of the given order (0 < order <= 2), k >= 0.
double weyl_trapezoid_weight(int k, double order);

/// Stencil weight w_k of the discretized skewed fractional derivative,
/// 1 < alpha <= 2. At alpha = 2 returns the exact central-difference
/// values {1, -2, 1}.
double riesz_feller_weight(int k, double alpha, double theta);

/// Closed-form limit of w_k as alpha -> 1+ with theta = 0. The operator is
/// singular at alpha = 1, so this table is a separate entry point rather
/// than a special case of riesz_feller_weight.
double riesz_feller_weight_alpha1_limit(int k);

/// Boundary tail sums (sL_i, sR_i): closed forms of the weight sums over
/// all virtual nodes beyond the left/right boundary, for interior node
/// i in 1..N-1.
std::pair<double, double> tail_weights(int i, int N, double alpha,
                                       double theta);

/// Explicit-scheme coefficient p_k = delta_{k0} + K_a (dt/h^a) w_k.
double p_coefficient(int k, const FractionalParams& params, double dt,
                     double h);

/// Precomputed weights for a fixed (alpha, theta, N). Immutable after
/// construction; safe to share across threads.
class WeightTable {
  public:
    WeightTable(double alpha, double theta, int N);

    double alpha() const { return alpha_; }
    double theta() const { return theta_; }
    int N() const { return N_; }
    double cL() const { return pair_.cL; }
    double cR() const { return pair_.cR; }

    /// w_k for |k| <= N; zero outside the stored range.
    double w(int k) const {
        const int idx = k + N_;
        if (idx < 0 || idx > 2 * N_) return 0.0;
        return w_[static_cast<std::size_t>(idx)];
    }

    /// Largest |k| with w_k != 0 (1 at alpha = 2, N otherwise).
    int support() const { return support_; }

    double sL(int i) const;
    double sR(int i) const;

  private:
    double alpha_;
    double theta_;
    int N_;
    FellerPair pair_;
    int support_;
    std::vector<double> w_;   // w_[k + N], k = -N..N
    std::vector<double> sL_;  // index 1..N-1 used
    std::vector<double> sR_;
};

}  // namespace fracdiff
