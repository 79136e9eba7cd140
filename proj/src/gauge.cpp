#include "spinsq/gauge.hpp"

#include <cmath>

namespace spinsq {

U1Connection U1Connection::from_flux(const LatticeGrid& g, const std::array<int, 6>& k) {
    U1Connection a(g);
    for (int p = 0; p < 6; ++p) {
        if (k[p] == 0) continue;
        const int mu = kPlaneA[p], nu = kPlaneB[p];
        const double nm = g.n[mu], nn = g.n[nu];
        for (std::int64_t i = 0; i < g.volume(); ++i) {
            const auto x = g.site(i);
            // Landau-like assembly: uniform phase gradient on nu-links plus a
            // compensating twist on the last mu-slab keeps every plaquette at
            // 2 pi k / (N_mu N_nu) and the holonomy consistent.
            a.link(i, nu) *= std::polar(1.0, 2.0 * M_PI * k[p] * x[mu] / (nm * nn));
            if (x[mu] == g.n[mu] - 1)
                a.link(i, mu) *= std::polar(1.0, -2.0 * M_PI * k[p] * x[nu] / nn);
        }
    }
    a.declared_flux_ = k;
    return a;
}

U1Connection U1Connection::from_one_form(const LatticeGrid& g, const TrigOneForm& aform) {
    U1Connection a(g);
    for (std::int64_t i = 0; i < g.volume(); ++i) {
        const auto x = g.site(i);
        auto xm = g.coords(x);
        for (int mu = 0; mu < 4; ++mu) {
            const double h = g.spacing(mu);
            xm[mu] += 0.5 * h;
            a.link(i, mu) = std::polar(1.0, h * aform.eval_re(mu, xm));
            xm[mu] -= 0.5 * h;
        }
    }
    return a;
}

U1Connection U1Connection::random(const LatticeGrid& g, std::mt19937_64& rng) {
    U1Connection a(g);
    std::uniform_real_distribution<double> uni(-M_PI, M_PI);
    for (int mu = 0; mu < 4; ++mu)
        for (std::int64_t i = 0; i < g.volume(); ++i) a.link(i, mu) = std::polar(1.0, uni(rng));
    return a;
}

cplx U1Connection::plaquette(std::array<int, 4> x, int mu, int nu) const {
    auto xp = x;
    xp[mu] = (x[mu] + 1) % grid_.n[mu];
    auto xq = x;
    xq[nu] = (x[nu] + 1) % grid_.n[nu];
    const std::int64_t i = grid_.index(x), ip = grid_.index(xp), iq = grid_.index(xq);
    return link(i, mu) * link(ip, nu) * std::conj(link(iq, mu)) * std::conj(link(i, nu));
}

GaugeTransform GaugeTransform::random(const LatticeGrid& g, std::mt19937_64& rng) {
    GaugeTransform s(g);
    std::uniform_real_distribution<double> uni(-M_PI, M_PI);
    for (std::int64_t i = 0; i < g.volume(); ++i) s.phases[i] = std::polar(1.0, uni(rng));
    return s;
}

std::pair<U1Connection, SpinorField> gauge_apply(const GaugeTransform& s, const U1Connection& a,
                                                 const SpinorField& phi) {
    require_same_grid(s.phases.grid(), a.grid(), "gauge_apply");
    require_same_grid(s.phases.grid(), phi.grid(), "gauge_apply");
    const LatticeGrid& g = a.grid();
    U1Connection ap = a;
    SpinorField phip(g);
    for (std::int64_t i = 0; i < g.volume(); ++i) phip[i] = s.phases[i] * phi[i];
    for (int mu = 0; mu < 4; ++mu) {
        for (std::int64_t i = 0; i < g.volume(); ++i) {
            auto x = g.site(i);
            x[mu] = (x[mu] + 1) % g.n[mu];
            ap.link(i, mu) = s.phases[i] * a.link(i, mu) * std::conj(s.phases[g.index(x)]);
        }
    }
    return {std::move(ap), std::move(phip)};
}

std::array<int, 6> flux_integers(const U1Connection& a) {
    const LatticeGrid& g = a.grid();
    std::array<int, 6> out{};
    for (int p = 0; p < 6; ++p) {
        const int mu = kPlaneA[p], nu = kPlaneB[p];
        int oa = -1, ob = -1; // the two off-plane axes
        for (int d = 0; d < 4; ++d)
            if (d != mu && d != nu) (oa < 0 ? oa : ob) = d;
        bool first = true;
        for (int sa = 0; sa < g.n[oa]; ++sa) {
            for (int sb = 0; sb < g.n[ob]; ++sb) {
                double sum = 0.0;
                std::array<int, 4> x{};
                x[oa] = sa;
                x[ob] = sb;
                for (int xm = 0; xm < g.n[mu]; ++xm)
                    for (int xn = 0; xn < g.n[nu]; ++xn) {
                        x[mu] = xm;
                        x[nu] = xn;
                        sum += std::arg(a.plaquette(x, mu, nu));
                    }
                const double q = sum / (2.0 * M_PI);
                const double rounded = std::round(q);
                if (std::abs(q - rounded) > 1e-6)
                    throw NonQuantizedFlux("flux_integers: plane (" + std::to_string(mu) + "," +
                                           std::to_string(nu) + ") sum " + std::to_string(q) +
                                           " deviates from an integer");
                if (first) {
                    out[p] = int(rounded);
                    first = false;
                } else if (int(rounded) != out[p]) {
                    throw NonQuantizedFlux("flux_integers: slice-dependent flux in plane (" +
                                           std::to_string(mu) + "," + std::to_string(nu) + ")");
                }
            }
        }
    }
    return out;
}

} // namespace spinsq
