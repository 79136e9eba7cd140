#include "spinsq/suites.hpp"

#include <cmath>
#include <random>

#include "spinsq/clifford.hpp"
#include "spinsq/conventions.hpp"
#include "spinsq/forms.hpp"
#include "spinsq/squaring.hpp"

namespace spinsq {

namespace {

struct Suite {
    std::vector<CheckResult> checks;
    CheckResult* current = nullptr;

    void begin(const std::string& name, double tol) {
        checks.push_back({name, 0.0, tol, false});
        current = &checks.back();
    }
    void observe(double err) { current->max_err = std::max(current->max_err, std::abs(err)); }
    void end() { current->pass = current->max_err <= current->tol; }
};

SpinorPlus rand_plus(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    const double a = g(rng), b = g(rng), c = g(rng), d = g(rng);
    return {cplx{a, b}, cplx{c, d}};
}

SpinorMinus rand_minus(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    const double a = g(rng), b = g(rng), c = g(rng), d = g(rng);
    return {cplx{a, b}, cplx{c, d}};
}

Covector rand_covector(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Covector v;
    for (int mu = 0; mu < 4; ++mu) v.c[mu] = g(rng);
    return v;
}

TwoForm rand_two_form(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    TwoForm b;
    for (int i = 0; i < 6; ++i) b.c[i] = g(rng);
    return b;
}

} // namespace

std::vector<CheckResult> run_algebra_suite(std::uint64_t seed, int samples) {
    Suite s;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uangle(-M_PI, M_PI);
    const GammaSet gam = GammaSet::canonical();
    const SDForm omegas[3] = {kOmega1, kOmega2, kOmega3};
    const TwoForm asd_basis[3] = {{{1, 0, 0, 0, 0, -1}}, {{0, 1, 0, 0, 1, 0}}, {{0, 0, 1, -1, 0, 0}}};
    const cplx I{0, 1};

    s.begin("clifford.anticommutation", 1e-12);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            const double target = (mu == nu) ? -2.0 : 0.0;
            for (const SpinorPlus& e : {SpinorPlus{1, 0}, SpinorPlus{0, 1}}) {
                const SpinorPlus acom = gam.apply_back(mu, gam.apply(nu, e)) +
                                        gam.apply_back(nu, gam.apply(mu, e)) - target * e;
                s.observe(std::sqrt(acom.norm_sq()));
            }
            for (const SpinorMinus& e : {SpinorMinus{1, 0}, SpinorMinus{0, 1}}) {
                const SpinorMinus acom = gam.apply(mu, gam.apply_back(nu, e)) +
                                         gam.apply(nu, gam.apply_back(mu, e)) - target * e;
                s.observe(std::sqrt(acom.norm_sq()));
            }
        }
    s.end();

    s.begin("clifford.vector_square", 1e-12);
    for (int it = 0; it < samples; ++it) {
        Covector v = rand_covector(rng);
        double n2 = 0.0;
        for (double c : v.c) n2 += c * c;
        if (n2 == 0.0) continue;
        const double inv = 1.0 / std::sqrt(n2);
        for (double& c : v.c) c *= inv;
        const SpinorPlus phi = rand_plus(rng);
        const SpinorPlus r = gamma_vec_back(v, gamma_vec(v, phi)) + phi;
        s.observe(std::sqrt(r.norm_sq() / phi.norm_sq()));
    }
    s.end();

    s.begin("clifford.skew_adjointness", 1e-12);
    for (int it = 0; it < samples; ++it) {
        const Covector v = rand_covector(rng);
        const SpinorPlus phi = rand_plus(rng);
        const SpinorMinus psi = rand_minus(rng);
        s.observe(std::abs(inner(gamma_vec(v, phi), psi) + inner(phi, gamma_vec_back(v, psi))));
    }
    s.end();

    s.begin("clifford.volume_element_split", 1e-12);
    for (const SpinorPlus& e : {SpinorPlus{1, 0}, SpinorPlus{0, 1}}) {
        SpinorPlus p = e;
        SpinorMinus m{};
        // apply gamma_3, then gamma_2, gamma_1, gamma_0 on the full spinor (p, m)
        for (int mu : {3, 2, 1, 0}) {
            const SpinorPlus pnew = gam.apply_back(mu, m);
            m = gam.apply(mu, p);
            p = pnew;
        }
        s.observe(std::sqrt((p + e).norm_sq()));
        s.observe(std::sqrt(m.norm_sq()));
    }
    for (const SpinorMinus& e : {SpinorMinus{1, 0}, SpinorMinus{0, 1}}) {
        SpinorPlus p{};
        SpinorMinus m = e;
        for (int mu : {3, 2, 1, 0}) {
            const SpinorPlus pnew = gam.apply_back(mu, m);
            m = gam.apply(mu, p);
            p = pnew;
        }
        s.observe(std::sqrt((m - e).norm_sq()));
        s.observe(std::sqrt(p.norm_sq()));
    }
    s.end();

    s.begin("clifford.asd_annihilates_wplus", 1e-12);
    for (int it = 0; it < samples; ++it) {
        const SpinorPlus phi = rand_plus(rng);
        for (const TwoForm& w : asd_basis) s.observe(std::sqrt(gamma_2form(w, phi).norm_sq()));
    }
    s.end();

    s.begin("clifford.sd_annihilates_wminus", 1e-12);
    for (int it = 0; it < samples; ++it) {
        const SpinorMinus psi = rand_minus(rng);
        for (const SDForm& w : omegas)
            s.observe(std::sqrt(gamma_2form_minus(to_two_form(w), psi).norm_sq()));
    }
    s.end();

    s.begin("clifford.sd_square_minus4", 1e-12);
    for (const SDForm& w : omegas)
        for (const SpinorPlus& e : {SpinorPlus{1, 0}, SpinorPlus{0, 1}}) {
            const SpinorPlus r =
                gamma_2form(to_two_form(w), gamma_2form(to_two_form(w), e)) + 4.0 * e;
            s.observe(std::sqrt(r.norm_sq()));
        }
    s.end();

    s.begin("clifford.quaternion_relation", 1e-12);
    for (const SpinorPlus& e : {SpinorPlus{1, 0}, SpinorPlus{0, 1}}) {
        const SpinorPlus lhs =
            gamma_2form(to_two_form(kOmega1), gamma_2form(to_two_form(kOmega2), e));
        const SpinorPlus rhs =
            (2.0 * conventions::kQuaternionSign) * gamma_2form(to_two_form(kOmega3), e);
        s.observe(std::sqrt((lhs - rhs).norm_sq()));
    }
    s.end();

    s.begin("forms.star_involution", 1e-14);
    for (int it = 0; it < samples; ++it) {
        const TwoForm b = rand_two_form(rng);
        s.observe((hodge_star2(hodge_star2(b)) - b).norm());
    }
    s.end();

    s.begin("forms.projector_algebra", 1e-14);
    for (int it = 0; it < samples; ++it) {
        const TwoForm b = rand_two_form(rng);
        const TwoForm sd = to_two_form(sd_project(b));
        const TwoForm asd = asd_project(b);
        s.observe((sd + asd - b).norm());
        s.observe((to_two_form(sd_project(sd)) - sd).norm());
        s.observe(sd_project(asd).norm());
        s.observe(asd_project(sd).norm());
    }
    s.end();

    s.begin("forms.norm_splitting", 1e-12);
    for (int it = 0; it < samples; ++it) {
        const TwoForm b = rand_two_form(rng);
        s.observe(b.norm_sq() - to_two_form(sd_project(b)).norm_sq() - asd_project(b).norm_sq());
    }
    s.end();

    s.begin("forms.wedge_star_inner", 1e-12);
    for (int it = 0; it < samples; ++it) {
        const TwoForm b = rand_two_form(rng);
        const TwoForm d = rand_two_form(rng);
        double ip = 0.0;
        for (int i = 0; i < 6; ++i) ip += b.c[i] * d.c[i];
        s.observe(wedge22(b, hodge_star2(d)) - ip);
    }
    s.end();

    s.begin("forms.acs_properties", 1e-10);
    for (int it = 0; it < samples; ++it) {
        const SpinorPlus phi = rand_plus(rng);
        if (phi.norm_sq() < 1e-3) continue;
        const ACS j = acs_from_sd(sigma(phi));
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                double jj = 0.0, jtj = 0.0;
                for (int k = 0; k < 4; ++k) {
                    jj += j.m[4 * r + k] * j.m[4 * k + c];
                    jtj += j.m[4 * k + r] * j.m[4 * k + c];
                }
                s.observe(jj + ((r == c) ? 1.0 : 0.0));
                s.observe(jtj - ((r == c) ? 1.0 : 0.0));
            }
    }
    s.end();

    s.begin("sigma.self_duality", 1e-14);
    for (int it = 0; it < samples; ++it) {
        const TwoForm t = to_two_form(sigma(rand_plus(rng)));
        s.observe((hodge_star2(t) - t).norm());
        s.observe(asd_project(t).norm());
    }
    s.end();

    s.begin("sigma.phase_invariance", 1e-12);
    for (int it = 0; it < samples; ++it) {
        const SpinorPlus phi = rand_plus(rng);
        const cplx ph = std::polar(1.0, uangle(rng));
        s.observe((sigma(ph * phi) - sigma(phi)).norm());
    }
    s.end();

    s.begin("sigma.norm_law", 1e-12);
    for (int it = 0; it < samples; ++it) {
        const SpinorPlus phi = rand_plus(rng);
        const double n2 = phi.norm_sq();
        s.observe((sigma(phi).norm() - std::sqrt(2.0) * n2) / std::max(1.0, n2));
    }
    s.end();

    s.begin("sigma.volume_law", 1e-12);
    for (int it = 0; it < samples; ++it) {
        const SpinorPlus phi = rand_plus(rng);
        const SDForm sg = sigma(phi);
        const double n2 = phi.norm_sq();
        s.observe((wedge22(sg, sg) - 2.0 * n2 * n2) / std::max(1.0, n2 * n2));
    }
    s.end();

    s.begin("sigma.preimage_roundtrip", 1e-10);
    for (int it = 0; it < samples; ++it) {
        const SpinorPlus phi = rand_plus(rng);
        if (phi.norm_sq() < 1e-6) continue;
        const SDForm sg = sigma(phi);
        s.observe((sigma(pointwise_preimage(sg)) - sg).norm() / std::max(1.0, sg.norm()));
    }
    s.end();

    return s.checks;
}

} // namespace spinsq
