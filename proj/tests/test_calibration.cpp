#include <doctest.h>

#include "spinsq/calibrate.hpp"
#include "spinsq/conventions.hpp"

using namespace spinsq;

TEST_CASE("calibration recovers the frozen identity constants") {
    const CalibrationResult r = calibrate_sigma(8, 2024, 2);
    CHECK(r.epsilon == conventions::kIdentitySign);
    CHECK(r.kappa == doctest::Approx(conventions::kIdentityKappa).epsilon(1e-10));
    CHECK(r.residual_rel < 1e-12);
}

TEST_CASE("calibration is stable across seeds") {
    double kmin = 1e300, kmax = -1e300;
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const CalibrationResult r = calibrate_sigma(8, seed, 1);
        CHECK(r.epsilon == conventions::kIdentitySign);
        CHECK(r.residual_rel < 1e-12);
        kmin = std::min(kmin, r.kappa);
        kmax = std::max(kmax, r.kappa);
    }
    CHECK(kmax - kmin < 1e-9);
}
