#pragma once

#include <span>
#include <vector>

#include "fracdiff/grid.hpp"

namespace fracdiff {

/// Fundamental solution of the classical diffusion equation,
/// (4 pi K t)^{-1/2} exp(-x^2 / (4 K t)).
double heat_kernel(double x, double t, double K);

/// One step of the classical theta scheme for the heat equation on a
/// bounded grid, written independently of the fractional code path
/// (its own tridiagonal solve). r = K dt / h^2; boundary nodes are set
/// to the supplied half-step Dirichlet values.
std::vector<double> classical_theta_step(std::span<const double> C, double r,
                                         double sigma, double gL_half,
                                         double gR_half);

/// Test functions with analytic second derivatives for the quadrature
/// oracle.
enum class OracleFunction { Gaussian, Sech2, Bump };

double oracle_value(OracleFunction f, double x);
double oracle_second_derivative(OracleFunction f, double x);

/// High-accuracy evaluation of the skewed fractional derivative of a
/// catalog function via adaptive quadrature of the one-sided fractional
/// integrals (singularity removed by substitution) applied to the
/// analytic second derivative. Target relative accuracy ~1e-6.
double weyl_quadrature_oracle(OracleFunction f, double x, double alpha,
                              double theta, double rel_tol = 1e-6);

struct FieldDifference {
    double l2;   ///< sqrt(h * sum (a_i - b_i)^2)
    double max;  ///< max |a_i - b_i|
};

FieldDifference compare_fields(std::span<const double> a,
                               std::span<const double> b, double h);

/// Field diagnostics over a grid.
double total_mass(std::span<const double> values, double h);
double center_of_mass(std::span<const double> values, const SpatialGrid& grid);
/// Fraction of mass outside the central window of relative width q.
double tail_mass(std::span<const double> values, const SpatialGrid& grid,
                 double q);
double symmetry_defect(std::span<const double> values);

}  // namespace fracdiff
