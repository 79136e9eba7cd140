#include <doctest.h>

#include "helpers.hpp"
#include "spinsq/calibrate.hpp"
#include "spinsq/preimage.hpp"

using namespace spinsq;
using namespace spinsq::testing;

namespace {

std::array<double, 3> bump_direction(double x0, double x1, int d) {
    const double u = 2.0 * x0 - 1.0;
    const double v = 2.0 * x1 - 1.0;
    const double r = std::hypot(u, v);
    const double psi = M_PI * std::min(r, 1.0);
    const double beta = d * std::atan2(v, u);
    return {std::sin(psi) * std::cos(beta), std::sin(psi) * std::sin(beta), std::cos(psi)};
}

} // namespace

TEST_CASE("constant fields invert to constant spinor fields") {
    const LatticeGrid g = LatticeGrid::cubic(4);
    const SDFormField alpha(g, kOmega2);
    const auto result = field_preimage(alpha);
    REQUIRE(std::holds_alternative<SpinorField>(result));
    const SpinorField& phi = std::get<SpinorField>(result);
    for (std::int64_t i = 0; i < g.volume(); ++i) {
        CHECK(dist(sigma(phi[i]), kOmega2) < 1e-12);
        CHECK(dist(phi[i], phi[0]) < 1e-12);
    }
}

TEST_CASE("smooth perturbations of the reference invert with small residual") {
    const LatticeGrid g = LatticeGrid::cubic(8);
    auto rng = seeded_rng(113);
    const TrigSpinor ts = random_trig_spinor(rng, 0.02, 2);
    SpinorField phi(g);
    {
        SpinorField smooth = sample_spinor(g, ts);
        for (std::int64_t i = 0; i < g.volume(); ++i) {
            phi[i] = smooth[i];
            phi[i].a += cplx{1.0, 0.0}; // nowhere-zero smooth field
        }
    }
    const SDFormField alpha = sigma_field(phi);

    const auto result = field_preimage(alpha);
    REQUIRE(std::holds_alternative<SpinorField>(result));
    const SpinorField& psi = std::get<SpinorField>(result);
    double maxn = 0.0, worst = 0.0;
    for (std::int64_t i = 0; i < g.volume(); ++i) maxn = std::max(maxn, alpha[i].norm());
    for (std::int64_t i = 0; i < g.volume(); ++i)
        worst = std::max(worst, dist(sigma(psi[i]), alpha[i]));
    CHECK(worst < 1e-8 * maxn);

    // phases continue discretely: re-check the jump bound directly
    const auto strides = g.strides();
    double max_jump = 0.0;
    for (std::int64_t i = 0; i < g.volume(); ++i) {
        const auto x = g.site(i);
        for (int mu = 0; mu < 4; ++mu) {
            const std::int64_t ip =
                (x[mu] + 1 == g.n[mu]) ? i - std::int64_t(g.n[mu] - 1) * strides[mu] : i + strides[mu];
            max_jump = std::max(max_jump, std::abs(std::arg(inner(psi[ip], psi[i]))));
        }
    }
    CHECK(max_jump < M_PI / 2.0);
}

TEST_CASE("a degree-1 winding field reports its obstruction") {
    const LatticeGrid g = LatticeGrid::cubic(8);
    SDFormField alpha(g);
    for (std::int64_t i = 0; i < g.volume(); ++i) {
        const auto x = g.coords(g.site(i));
        const auto n = bump_direction(x[0], x[1], 1);
        alpha[i] = SDForm{{n[0], n[1], n[2]}};
    }
    const auto result = field_preimage(alpha);
    REQUIRE(std::holds_alternative<ObstructionReport>(result));
    const auto& rep = std::get<ObstructionReport>(result);
    CHECK(rep.degrees == DegreeVector{1, 0, 0, 0, 0, 0});
    CHECK(rep.max_phase_jump >= M_PI / 2.0);
}

TEST_CASE("fields with zeros are rejected") {
    const LatticeGrid g = LatticeGrid::cubic(4);
    SDFormField alpha(g, kOmega1);
    alpha.at({0, 1, 0, 2}) = SDForm{};
    CHECK_THROWS_AS(field_preimage(alpha), DegenerateForm);
}
