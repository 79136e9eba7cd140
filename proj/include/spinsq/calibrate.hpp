#pragma once

// Calibration oracle for the differential identity.  Random band-limited
// trigonometric pairs (phi, A) are evaluated with exact analytic derivatives
// (no discretization error), and the scalar kappa and sign eps in
//   |phi|^2 D^A phi = eps i (2 d* sigma_kappa(phi) + <grad^A phi, i phi>) . phi
// are recovered by least squares over the sample points.  The minimum must
// sit at machine precision; the resulting pair is frozen in conventions.hpp.

#include <cstdint>

#include "spinsq/operators.hpp"

namespace spinsq {

struct CalibrationResult {
    double kappa = 0.0;
    int epsilon = 0;
    double residual_rel = 0.0; // ||lhs - rhs|| / ||lhs|| at the optimum
    int grid_n = 0;
    int trials = 0;
    std::uint64_t seed = 0;
};

CalibrationResult calibrate_sigma(int grid_n, std::uint64_t seed, int trials);

// sampling helpers shared with tests and manufactured data

SpinorField sample_spinor(const LatticeGrid& g, const TrigSpinor& s);
OneFormField sample_one_form_re(const LatticeGrid& g, const TrigOneForm& a);

} // namespace spinsq
