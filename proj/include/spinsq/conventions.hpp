#pragma once

// Frozen convention constants.  Everything here is pinned by the algebra
// and calibration suites (tests/test_calibration.cpp, `spinsq calibrate-sigma`);
// change nothing without re-running them.

namespace spinsq::conventions {

// sigma(phi) = kSigmaScale * sum_k <i gamma(w_k) phi, phi> w_k.
// With this scale |sigma(phi)| = sqrt(2) |phi|^2 and sigma((1,0)) = w1.
inline constexpr double kSigmaScale = 0.5;

// The differential identity
//   |phi|^2 D^A phi = eps * i * (2 d* sigma_kappa(phi) + <grad^A phi, i phi>) . phi
// holds for the calibrated pair (kappa, eps) below; equivalently the
// 1-form entering the identity is  tau = (2 kappa / kSigmaScale) d* sigma + rho.
inline constexpr double kIdentityKappa = 0.125;
inline constexpr int kIdentitySign = +1;

// d* sigma coefficient in tau as a multiple of the library sigma.
inline constexpr double kIdentityDstarScale = 2.0 * kIdentityKappa / kSigmaScale; // = 0.5

// gamma(w1) gamma(w2) = 2 * kQuaternionSign * gamma(w3) on W+.
inline constexpr int kQuaternionSign = +1;

// scale-free "nowhere zero" threshold: min|phi| > factor * mean|phi|.
inline constexpr double kNowhereZeroFactor = 1e-6;

// scale-free degeneracy threshold for field-level form operations:
// tol = kDegenerateFactor * grid-max |alpha|.
inline constexpr double kDegenerateFactor = 1e-10;

} // namespace spinsq::conventions
