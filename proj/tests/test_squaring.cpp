#include <doctest.h>

#include "helpers.hpp"
#include "spinsq/conventions.hpp"
#include "spinsq/squaring.hpp"

using namespace spinsq;
using namespace spinsq::testing;

TEST_CASE("sigma agrees with its gamma-matrix definition") {
    auto rng = seeded_rng(51);
    const SDForm omegas[3] = {kOmega1, kOmega2, kOmega3};
    const cplx I{0, 1};
    for (int it = 0; it < 300; ++it) {
        const SpinorPlus phi = random_spinor_plus(rng);
        const SDForm s = sigma(phi);
        for (int k = 0; k < 3; ++k) {
            const double coeff = conventions::kSigmaScale *
                                 real_inner(I * gamma_2form(to_two_form(omegas[k]), phi), phi);
            CHECK(std::abs(s.s[k] - coeff) < 1e-13);
        }
    }
}

TEST_CASE("sigma examples and laws") {
    CHECK(dist(sigma(SpinorPlus{1, 0}), kOmega1) == 0.0);
    CHECK(sigma(SpinorPlus{}).norm() == 0.0);

    auto rng = seeded_rng(53);
    std::uniform_real_distribution<double> uni(-M_PI, M_PI);
    for (int it = 0; it < 1000; ++it) {
        const SpinorPlus phi = random_spinor_plus(rng);
        const SDForm s = sigma(phi);

        // phase invariance
        const cplx ph = std::polar(1.0, uni(rng));
        CHECK(dist(sigma(ph * phi), s) < 1e-12 * std::max(1.0, s.norm()));

        // self-duality through the star, exactly
        const TwoForm t = to_two_form(s);
        CHECK(dist(hodge_star2(t), t) < 1e-14);
        CHECK(asd_project(t).norm() < 1e-14);

        // norm and volume laws
        const double n2 = phi.norm_sq();
        CHECK(s.norm() == doctest::Approx(std::sqrt(2.0) * n2).epsilon(1e-12));
        CHECK(wedge22(s, s) == doctest::Approx(2.0 * n2 * n2).epsilon(1e-12));
    }
}

TEST_CASE("bloch data") {
    const BlochData b1 = bloch(SpinorPlus{1, 0});
    CHECK(b1.defined);
    CHECK(b1.r == doctest::Approx(1.0));
    CHECK(b1.n[0] == doctest::Approx(1.0));
    CHECK(b1.n[1] == doctest::Approx(0.0));
    CHECK(b1.n[2] == doctest::Approx(0.0));

    const BlochData b2 = bloch(SpinorPlus{0, 1});
    CHECK(b2.r == doctest::Approx(1.0));
    CHECK(b2.n[0] == doctest::Approx(-1.0));

    CHECK_FALSE(bloch(SpinorPlus{}).defined);

    auto rng = seeded_rng(59);
    for (int it = 0; it < 500; ++it) {
        const SpinorPlus phi = random_spinor_plus(rng);
        const BlochData b = bloch(phi);
        if (!b.defined) continue;
        CHECK(b.n[0] * b.n[0] + b.n[1] * b.n[1] + b.n[2] * b.n[2] ==
              doctest::Approx(1.0).epsilon(1e-12));
        CHECK(b.r == doctest::Approx(phi.norm_sq()).epsilon(1e-12));
    }
}

TEST_CASE("pointwise preimage") {
    CHECK(dist(pointwise_preimage(kOmega1), SpinorPlus{1, 0}) < 1e-15);
    CHECK_THROWS_AS(pointwise_preimage(SDForm{}), DegenerateForm);

    auto rng = seeded_rng(61);
    for (int it = 0; it < 1000; ++it) {
        const SpinorPlus phi = random_spinor_plus(rng);
        if (phi.norm_sq() < 1e-6) continue;
        const SDForm s = sigma(phi);
        const SpinorPlus psi = pointwise_preimage(s);
        // roundtrip through sigma
        CHECK(dist(sigma(psi), s) < 1e-10 * std::max(1.0, s.norm()));
        // psi is phi up to a phase: |<psi, phi>| = |psi||phi|
        const double ip = std::abs(inner(psi, phi));
        CHECK(ip == doctest::Approx(std::sqrt(psi.norm_sq() * phi.norm_sq())).epsilon(1e-10));
        // phase convention: first component real and >= 0
        CHECK(psi.a.imag() == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(psi.a.real() >= 0.0);
    }

    // second-component branch
    const SpinorPlus south = pointwise_preimage(-1.0 * kOmega1);
    CHECK(south.a == cplx{0, 0});
    CHECK(south.b.real() == doctest::Approx(1.0));
    CHECK(south.b.imag() == 0.0);
}

TEST_CASE("injectivity up to phase via bloch data") {
    auto rng = seeded_rng(67);
    std::uniform_real_distribution<double> uni(-M_PI, M_PI);
    for (int it = 0; it < 300; ++it) {
        const SpinorPlus phi = random_spinor_plus(rng);
        if (phi.norm_sq() < 1e-6) continue;
        const SpinorPlus psi = std::polar(1.0, uni(rng)) * phi;
        // equal bloch data implies equal preimages after re-phasing
        const SpinorPlus pre_phi = pointwise_preimage(sigma(phi));
        const SpinorPlus pre_psi = pointwise_preimage(sigma(psi));
        CHECK(dist(pre_phi, pre_psi) < 1e-10 * std::sqrt(phi.norm_sq()));
    }
}
