#pragma once

// Smallest-eigenvalue kernel of D^A via inverse power iteration on
// Ddag D + shift with conjugate-gradient inner solves, parallel-spinor
// detection, and the pipelines turning spinor data into self-dual form
// reports (closedness, transversality, corollary residual, degree data,
// almost-complex defect, conformal factor).

#include <optional>
#include <vector>

#include "spinsq/topology.hpp"

namespace spinsq {

struct SolveOptions {
    double tol = 1e-10;      // relative Rayleigh-change tolerance
    int max_outer = 100;
    int max_inner = 5000;    // CG iteration cap per solve
    double cg_tol = 1e-11;   // CG relative residual target
    double shift = 1e-8;
    std::uint64_t seed = 1;  // start-vector seed (band-limited random)
};

struct SolveReport {
    double rayleigh = 0.0;            // <DdagD phi, phi>, unit-norm phi
    double dirac_rel_residual = 0.0;  // ||D phi|| / ||phi||
    int iterations = 0;
    bool converged = false;
    double eig_residual = 0.0;        // ||DdagD phi - rayleigh phi||
    int cg_total = 0;
    std::vector<double> rayleigh_history;
};

/// Inverse power iteration for the smallest eigenpair of Ddag D.  Deflation
/// vectors are projected out of every iterate (twice-applied modified
/// Gram-Schmidt).  The start is a seeded band-limited random spinor field,
/// or `initial` when given.  Convergence needs both a settled Rayleigh
/// quotient and a small eigen-equation residual, each relative to
/// rayleigh + shift; a non-converged run still returns its best iterate with
/// converged = false.
std::pair<SpinorField, SolveReport> solve_smallest(const U1Connection& a, const SolveOptions& opt,
                                                   const std::vector<const SpinorField*>& deflate = {},
                                                   const SpinorField* initial = nullptr);

struct ParallelCheck {
    bool parallel = false;
    double defect = 0.0; // (sum_mu ||grad_mu phi||^2)^{1/2} / ||phi||
};

/// Throws ZeroField on vanishing input.
ParallelCheck is_parallel(const U1Connection& a, const SpinorField& phi, double tol);

struct PipelineReport {
    double dirac_rel_residual = 0.0;
    double transversality_norm = 0.0;  // L2 of <grad^A phi, i phi>
    double min_modulus = 0.0;          // min_x |phi(x)|
    double mean_modulus = 0.0;
    double closedness_residual = 0.0;  // L2 of d sigma(phi)
    double corollary_residual = 0.0;   // L2 of the calibrated 2 d* sigma + rho
    bool nowhere_zero = false;
    std::optional<double> acs_defect;          // max_x ||J(x)^2 + Id||, off zeros
    std::optional<DegreeVector> degree_vector; // absent when zeros are present

    // kahler_pipeline extras
    std::optional<double> parallel_defect;
    bool parallel = false;
    std::optional<double> sigma_constancy;     // max_x |sigma(x) - mean sigma|
    std::optional<double> conformal_variance;  // site variance of conformal_factor
};

PipelineReport symplectic_pipeline(const U1Connection& a, const SpinorField& phi);

/// symplectic_pipeline plus the parallelism check (tolerance `parallel_tol`),
/// sigma constancy and conformal-factor variance.
PipelineReport kahler_pipeline(const U1Connection& a, const SpinorField& phi,
                               double parallel_tol = 1e-6);

// field helpers shared by the solver and drivers
double mean_modulus(const SpinorField& phi);
double min_modulus(const SpinorField& phi);
void normalize(SpinorField& phi);
SpinorField random_band_limited_spinor(const LatticeGrid& g, std::uint64_t seed, int max_degree = 2);
/// (1/V) sum_x ||phi(x) - mean||^2 / ((1/V) sum_x ||phi(x)||^2); global-phase invariant.
double site_variance(const SpinorField& phi);

} // namespace spinsq
