#include "spinsq/preimage.hpp"

#include <cmath>

namespace spinsq {

namespace {

double grid_max_norm(const SDFormField& alpha) {
    double m = 0.0;
    for (std::int64_t i = 0; i < alpha.size(); ++i) m = std::max(m, alpha[i].norm());
    return m;
}

} // namespace

FieldPreimageResult field_preimage(const SDFormField& alpha, double tol) {
    const LatticeGrid& g = alpha.grid();
    SpinorField phi(g);
    for (std::int64_t i = 0; i < g.volume(); ++i) {
        if (!(alpha[i].norm() > tol))
            throw DegenerateForm("field_preimage: form norm below tolerance", g.site(i));
        phi[i] = pointwise_preimage(alpha[i], tol);
    }

    // Greedy phase continuation, lexicographic order (axis 3 fastest): each
    // site is re-phased against its already-visited neighbor along the
    // highest nonzero axis.
    for (std::int64_t i = 1; i < g.volume(); ++i) {
        auto x = g.site(i);
        int axis = 3;
        while (x[axis] == 0) --axis;
        auto ref = x;
        ref[axis] -= 1;
        const cplx ov = inner(phi[i], phi[size_t(g.index(ref))]);
        if (std::abs(ov) > 0.0) phi[i] = std::polar(1.0, -std::arg(ov)) * phi[i];
    }

    // Every nearest-neighbor jump (wrap links included) must stay below pi/2.
    const auto strides = g.strides();
    ObstructionReport fail;
    bool obstructed = false;
    for (std::int64_t i = 0; i < g.volume() && !obstructed; ++i) {
        const auto x = g.site(i);
        for (int mu = 0; mu < 4; ++mu) {
            const std::int64_t ip =
                (x[mu] + 1 == g.n[mu]) ? i - std::int64_t(g.n[mu] - 1) * strides[mu] : i + strides[mu];
            const cplx ov = inner(phi[ip], phi[i]);
            const double jump = (std::abs(ov) > 0.0) ? std::abs(std::arg(ov)) : M_PI;
            if (jump >= M_PI / 2.0) {
                fail.max_phase_jump = jump;
                fail.failure_site = x;
                fail.failure_direction = mu;
                obstructed = true;
                break;
            }
        }
    }
    if (obstructed) {
        fail.degrees = degree_vector(sphere_map(alpha, tol));
        return fail;
    }

    // residual guard: sigma must reproduce alpha at every site
    const double scale = std::max(1e-300, grid_max_norm(alpha));
    for (std::int64_t i = 0; i < g.volume(); ++i) {
        const SDForm r = sigma(phi[i]) - alpha[i];
        if (r.norm() > 1e-8 * scale)
            throw DegenerateForm("field_preimage: pointwise inversion residual above 1e-8", g.site(i));
    }
    return phi;
}

FieldPreimageResult field_preimage(const SDFormField& alpha) {
    return field_preimage(alpha, conventions::kDegenerateFactor * grid_max_norm(alpha));
}

} // namespace spinsq
