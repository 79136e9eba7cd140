#include "spinsq/topology.hpp"

#include <cmath>

namespace spinsq {

namespace {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double triple(const Vec3& a, const Vec3& b, const Vec3& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) + a[1] * (b[2] * c[0] - b[0] * c[2]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

/// Signed solid angle of the spherical triangle (a,b,c) via the atan2 form;
/// assumes unit vectors.
double signed_solid_angle(const Vec3& a, const Vec3& b, const Vec3& c) {
    return 2.0 * std::atan2(triple(a, b, c), 1.0 + dot(a, b) + dot(b, c) + dot(c, a));
}

void check_edge(const Vec3& a, const Vec3& b, int plane) {
    if (dot(a, b) <= -1.0 + 1e-9)
        throw AntipodalEdge("degree_2torus: adjacent images antipodal in plane " + std::to_string(plane));
}

} // namespace

SphereMapField sphere_map(const SDFormField& alpha, double tol) {
    const LatticeGrid& g = alpha.grid();
    SphereMapField n(g);
    for (std::int64_t i = 0; i < g.volume(); ++i) {
        const double mag = std::sqrt(alpha[i].s[0] * alpha[i].s[0] + alpha[i].s[1] * alpha[i].s[1] +
                                     alpha[i].s[2] * alpha[i].s[2]);
        if (!(mag * std::sqrt(2.0) > tol) || mag == 0.0)
            throw DegenerateForm("sphere_map: form norm below tolerance", g.site(i));
        n[i] = {alpha[i].s[0] / mag, alpha[i].s[1] / mag, alpha[i].s[2] / mag};
    }
    return n;
}

SphereMapField sphere_map(const SDFormField& alpha) {
    double maxn = 0.0;
    for (std::int64_t i = 0; i < alpha.size(); ++i) maxn = std::max(maxn, alpha[i].norm());
    return sphere_map(alpha, conventions::kDegenerateFactor * maxn);
}

Degree degree_2torus(const SphereMapField& n, int plane, std::array<int, 4> base) {
    const LatticeGrid& g = n.grid();
    const int mu = kPlaneA[plane], nu = kPlaneB[plane];
    double total = 0.0;
    std::array<int, 4> x = base;
    for (int xm = 0; xm < g.n[mu]; ++xm) {
        for (int xn = 0; xn < g.n[nu]; ++xn) {
            x[mu] = xm;
            x[nu] = xn;
            auto xp = x, xq = x, xpq = x;
            xp[mu] = (xm + 1) % g.n[mu];
            xq[nu] = (xn + 1) % g.n[nu];
            xpq[mu] = xp[mu];
            xpq[nu] = xq[nu];
            const Vec3& a = n.at(x);
            const Vec3& b = n.at(xp);
            const Vec3& c = n.at(xpq);
            const Vec3& d = n.at(xq);
            check_edge(a, b, plane);
            check_edge(b, c, plane);
            check_edge(c, d, plane);
            check_edge(d, a, plane);
            check_edge(a, c, plane);
            // quad split into (a,b,c) + (a,c,d), orientation mu then nu
            total += signed_solid_angle(a, b, c) + signed_solid_angle(a, c, d);
        }
    }
    const double q = total / (4.0 * M_PI);
    Degree deg;
    deg.value = int(std::lround(q));
    deg.rounding_defect = std::abs(q - deg.value);
    if (deg.rounding_defect > 1e-3)
        throw NonIntegerDegree("degree_2torus: area sum " + std::to_string(q) +
                               " is not an integer in plane " + std::to_string(plane));
    return deg;
}

DegreeVector degree_vector(const SphereMapField& n) {
    DegreeVector d{};
    for (int p = 0; p < 6; ++p) d[p] = degree_2torus(n, p).value;
    return d;
}

SDFormField reference_form(const LatticeGrid& g) { return SDFormField(g, kOmega1); }

C1Comparison c1_equal(const SDFormField& alpha, const SDFormField& ref) {
    require_same_grid(alpha.grid(), ref.grid(), "c1_equal");
    const LatticeGrid& g = alpha.grid();
    const SphereMapField na = sphere_map(alpha);
    const SphereMapField nr = sphere_map(ref);

    C1Comparison cmp;
    for (int p = 0; p < 6; ++p) {
        const int mu = kPlaneA[p], nu = kPlaneB[p];
        int oa = -1, ob = -1;
        for (int d = 0; d < 4; ++d)
            if (d != mu && d != nu) (oa < 0 ? oa : ob) = d;
        // slice independence: every parallel slice must report the same integer
        for (const auto* field : {&na, &nr}) {
            int first = 0;
            bool have = false;
            for (int sa = 0; sa < g.n[oa]; ++sa)
                for (int sb = 0; sb < g.n[ob]; ++sb) {
                    std::array<int, 4> base{};
                    base[oa] = sa;
                    base[ob] = sb;
                    const int v = degree_2torus(*field, p, base).value;
                    if (!have) {
                        first = v;
                        have = true;
                    } else if (v != first) {
                        throw NonIntegerDegree("c1_equal: slice-dependent degree in plane " +
                                               std::to_string(p));
                    }
                }
            (field == &na ? cmp.degrees_alpha[p] : cmp.degrees_ref[p]) = first;
        }
    }
    cmp.equal = cmp.degrees_alpha == cmp.degrees_ref;
    return cmp;
}

} // namespace spinsq
