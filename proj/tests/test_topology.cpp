#include <doctest.h>

#include "helpers.hpp"
#include "spinsq/calibrate.hpp"
#include "spinsq/topology.hpp"

using namespace spinsq;
using namespace spinsq::testing;

namespace {

/// Degree-d map of the (a0,a1) coordinate plane into S^2: a polar bump
/// covering the sphere inside the unit disk around the cell center, south
/// pole outside, so the map closes up across the torus seam.
std::array<double, 3> bump_direction(double x0, double x1, int d) {
    const double u = 2.0 * x0 - 1.0;
    const double v = 2.0 * x1 - 1.0;
    const double r = std::hypot(u, v);
    const double psi = M_PI * std::min(r, 1.0);
    const double beta = d * std::atan2(v, u);
    return {std::sin(psi) * std::cos(beta), std::sin(psi) * std::sin(beta), std::cos(psi)};
}

SDFormField winding_field(const LatticeGrid& g, int plane, int d) {
    SDFormField alpha(g);
    const int a0 = kPlaneA[plane], a1 = kPlaneB[plane];
    for (std::int64_t i = 0; i < g.volume(); ++i) {
        const auto x = g.coords(g.site(i));
        const auto n = bump_direction(x[a0] / g.period[a0], x[a1] / g.period[a1], d);
        alpha[i] = SDForm{{n[0], n[1], n[2]}};
    }
    return alpha;
}

/// Brute-force oracle: the same analytic map sampled on a 4x finer 2-torus
/// mesh, with an independently coded spherical-area accumulation.
double oracle_degree(int d, int nfine) {
    double total = 0.0;
    auto at = [&](int i, int j) {
        return bump_direction(double(i % nfine) / nfine, double(j % nfine) / nfine, d);
    };
    auto area = [](const std::array<double, 3>& a, const std::array<double, 3>& b,
                   const std::array<double, 3>& c) {
        const double cx = b[1] * c[2] - b[2] * c[1];
        const double cy = b[2] * c[0] - b[0] * c[2];
        const double cz = b[0] * c[1] - b[1] * c[0];
        const double num = a[0] * cx + a[1] * cy + a[2] * cz;
        const double den = 1.0 + (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) +
                           (b[0] * c[0] + b[1] * c[1] + b[2] * c[2]) +
                           (c[0] * a[0] + c[1] * a[1] + c[2] * a[2]);
        return 2.0 * std::atan2(num, den);
    };
    for (int i = 0; i < nfine; ++i)
        for (int j = 0; j < nfine; ++j) {
            total += area(at(i, j), at(i + 1, j), at(i + 1, j + 1));
            total += area(at(i, j), at(i + 1, j + 1), at(i, j + 1));
        }
    return total / (4.0 * M_PI);
}

} // namespace

TEST_CASE("sphere_map basics") {
    const LatticeGrid g = LatticeGrid::cubic(4);
    const SphereMapField n = sphere_map(reference_form(g));
    for (std::int64_t i = 0; i < g.volume(); ++i) {
        CHECK(n[i][0] == 1.0);
        CHECK(n[i][1] == 0.0);
        CHECK(n[i][2] == 0.0);
    }

    // field with a zero names the offending site
    SDFormField alpha = reference_form(g);
    alpha.at({1, 2, 3, 0}) = SDForm{};
    try {
        sphere_map(alpha);
        FAIL("expected DegenerateForm");
    } catch (const DegenerateForm& e) {
        CHECK(e.has_site);
        CHECK(e.site_index == std::array<int, 4>{1, 2, 3, 0});
    }
}

TEST_CASE("sphere_map of sigma matches bloch directions") {
    const LatticeGrid g = LatticeGrid::cubic(4);
    auto rng = seeded_rng(101);
    SpinorField phi(g);
    for (std::int64_t i = 0; i < g.volume(); ++i) {
        SpinorPlus s = random_spinor_plus(rng);
        s.a += cplx{3.0, 0.0}; // keep nowhere-zero
        phi[i] = s;
    }
    const SphereMapField n = sphere_map(sigma_field(phi));
    for (std::int64_t i = 0; i < g.volume(); ++i) {
        const BlochData b = bloch(phi[i]);
        for (int k = 0; k < 3; ++k) CHECK(n[i][k] == doctest::Approx(b.n[k]).epsilon(1e-12));
    }
}

TEST_CASE("degrees of constructed winding maps match the 4x oracle") {
    const LatticeGrid g = LatticeGrid::cubic(8);
    for (int plane = 0; plane < 6; ++plane) {
        for (int d = -2; d <= 2; ++d) {
            const SDFormField alpha = winding_field(g, plane, d);
            const SphereMapField n = sphere_map(alpha);
            for (int p = 0; p < 6; ++p) {
                const Degree deg = degree_2torus(n, p);
                const int want = (p == plane) ? d : 0;
                CHECK(deg.value == want);
                CHECK(deg.rounding_defect < 1e-9);
            }
            const double oracle = oracle_degree(d, 4 * 8);
            CHECK(std::lround(oracle) == d);
            CHECK(std::abs(oracle - std::lround(oracle)) < 1e-9);
        }
    }
}

TEST_CASE("degree invariance under pointwise rotation and refinement") {
    const LatticeGrid g = LatticeGrid::cubic(8);
    const SDFormField alpha = winding_field(g, 0, 1);
    const SphereMapField n = sphere_map(alpha);

    // a fixed SO(3) rotation of every image point is homotopic to the identity
    const double th = 0.83;
    SphereMapField rot(g);
    for (std::int64_t i = 0; i < g.volume(); ++i) {
        const auto& v = n[i];
        rot[i] = {v[0], std::cos(th) * v[1] - std::sin(th) * v[2],
                  std::sin(th) * v[1] + std::cos(th) * v[2]};
    }
    for (int p = 0; p < 6; ++p) CHECK(degree_2torus(rot, p).value == degree_2torus(n, p).value);

    // identical integers at N and 2N
    const LatticeGrid g2 = LatticeGrid::cubic(16);
    const SphereMapField n2 = sphere_map(winding_field(g2, 0, 1));
    for (int p = 0; p < 6; ++p) CHECK(degree_2torus(n2, p).value == degree_2torus(n, p).value);
}

TEST_CASE("degree guards") {
    const LatticeGrid g = LatticeGrid::cubic(4);
    // adjacent antipodal images
    SphereMapField n(g, {0.0, 0.0, 1.0});
    n.at({0, 0, 0, 1}) = {0.0, 0.0, -1.0};
    CHECK_THROWS_AS(degree_2torus(n, 2 /* plane (0,3) */), AntipodalEdge);

    // the rounding guard rejects data violating the unit-vector invariant
    SphereMapField shrunk(g, {0.0, 0.0, 1.0});
    auto rng = seeded_rng(103);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (std::int64_t i = 0; i < g.volume(); ++i) {
        const double z = 2.0 * uni(rng) - 1.0;
        const double ph = 2.0 * M_PI * uni(rng);
        const double r = std::sqrt(1.0 - z * z);
        shrunk[i] = {0.5 * r * std::cos(ph), 0.5 * r * std::sin(ph), 0.5 * z};
    }
    bool nonint = false;
    for (int p = 0; p < 6 && !nonint; ++p) {
        try {
            (void)degree_2torus(shrunk, p);
        } catch (const NonIntegerDegree&) {
            nonint = true;
        } catch (const AntipodalEdge&) {
        }
    }
    CHECK(nonint);
}

TEST_CASE("c1_equal verdicts") {
    const LatticeGrid g = LatticeGrid::cubic(8);
    const SDFormField ref = reference_form(g);

    // identical constants
    const C1Comparison same = c1_equal(ref, ref);
    CHECK(same.equal);
    CHECK(same.degrees_alpha == DegreeVector{0, 0, 0, 0, 0, 0});

    // sigma of a smooth nowhere-zero spinor field has all degrees zero
    auto rng = seeded_rng(107);
    const TrigSpinor ts = random_trig_spinor(rng, 0.02, 2);
    SpinorField phi = sample_spinor(g, ts);
    for (std::int64_t i = 0; i < g.volume(); ++i) phi[i].a += cplx{1.0, 0.0};
    const C1Comparison fromsigma = c1_equal(sigma_field(phi), ref);
    CHECK(fromsigma.equal);
    CHECK(fromsigma.degrees_alpha == DegreeVector{0, 0, 0, 0, 0, 0});

    // a degree-1 winding field differs from the reference
    const C1Comparison wind = c1_equal(winding_field(g, 0, 1), ref);
    CHECK_FALSE(wind.equal);
    CHECK(wind.degrees_alpha == DegreeVector{1, 0, 0, 0, 0, 0});
    CHECK(wind.degrees_ref == DegreeVector{0, 0, 0, 0, 0, 0});
}
