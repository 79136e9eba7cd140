#include "spinsq/calibrate.hpp"

#include <cmath>

#include "spinsq/operators.hpp"

namespace spinsq {

SpinorField sample_spinor(const LatticeGrid& g, const TrigSpinor& s) {
    SpinorField f(g);
    for (std::int64_t i = 0; i < g.volume(); ++i) {
        const auto x = g.coords(g.site(i));
        f[i] = {s.a.eval(x), s.b.eval(x)};
    }
    return f;
}

OneFormField sample_one_form_re(const LatticeGrid& g, const TrigOneForm& a) {
    OneFormField f(g);
    for (std::int64_t i = 0; i < g.volume(); ++i) {
        const auto x = g.coords(g.site(i));
        for (int mu = 0; mu < 4; ++mu) f[i].t[mu] = a.eval_re(mu, x);
    }
    return f;
}

CalibrationResult calibrate_sigma(int grid_n, std::uint64_t seed, int trials) {
    const LatticeGrid g = LatticeGrid::cubic(grid_n);
    std::mt19937_64 rng(seed);
    const cplx I{0.0, 1.0};

    // per-site (lhs, kappa-coefficient, kappa-free) triples over all trials
    struct Sample {
        SpinorMinus l, u, v;
    };
    std::vector<Sample> samples;
    samples.reserve(size_t(g.volume()) * size_t(trials));

    for (int t = 0; t < trials; ++t) {
        const TrigSpinor phi = random_trig_spinor(rng, 0.4, 2);
        const TrigOneForm aform = random_trig_one_form(rng, 0.5, 2);

        for (std::int64_t i = 0; i < g.volume(); ++i) {
            const auto x = g.coords(g.site(i));
            const cplx a = phi.a.eval(x), b = phi.b.eval(x);
            const SpinorPlus ph{a, b};
            cplx da[4], db[4], cda[4], cdb[4];
            double aa[4];
            for (int mu = 0; mu < 4; ++mu) {
                da[mu] = phi.a.eval_deriv(mu, x);
                db[mu] = phi.b.eval_deriv(mu, x);
                aa[mu] = aform.eval_re(mu, x);
                cda[mu] = da[mu] + I * aa[mu] * a;
                cdb[mu] = db[mu] + I * aa[mu] * b;
            }

            // Bloch components B = (|a|^2-|b|^2, 2Re(conj(a)b), 2Im(conj(a)b))
            // and their exact derivatives; the plain derivative d equals the
            // covariant one here because B is gauge-invariant.
            double dB[3][4];
            for (int mu = 0; mu < 4; ++mu) {
                const cplx w = std::conj(da[mu]) * b + std::conj(a) * db[mu];
                dB[0][mu] = 2.0 * (std::conj(a) * da[mu]).real() - 2.0 * (std::conj(b) * db[mu]).real();
                dB[1][mu] = 2.0 * w.real();
                dB[2][mu] = 2.0 * w.imag();
            }
            // d* of the self-dual form with coefficients B
            Covector dsB;
            dsB.c[0] = dB[0][1] + dB[1][2] + dB[2][3];
            dsB.c[1] = -dB[0][0] + dB[2][2] - dB[1][3];
            dsB.c[2] = -dB[1][0] - dB[2][1] + dB[0][3];
            dsB.c[3] = -dB[2][0] + dB[1][1] - dB[0][2];

            Covector rho;
            for (int mu = 0; mu < 4; ++mu)
                rho.c[mu] = (cda[mu] * std::conj(a) + cdb[mu] * std::conj(b)).imag();

            // lhs and the kappa-linear decomposition of the right side:
            // rhs(kappa, eps) = eps (kappa U + V)
            SpinorMinus dphi{};
            for (int mu = 0; mu < 4; ++mu) {
                Covector e{};
                e.c[mu] = 1.0;
                dphi = dphi + gamma_vec(e, SpinorPlus{cda[mu], cdb[mu]});
            }
            const SpinorMinus L = ph.norm_sq() * dphi;
            Covector four_dsB;
            for (int mu = 0; mu < 4; ++mu) four_dsB.c[mu] = 4.0 * dsB.c[mu];
            samples.push_back({L, I * gamma_vec(four_dsB, ph), I * gamma_vec(rho, ph)});
        }
    }

    const auto n = std::int64_t(samples.size());
    const double suu = pairwise_sum(0, n, [&](std::int64_t i) { return samples[i].u.norm_sq(); });
    const double sll = pairwise_sum(0, n, [&](std::int64_t i) { return samples[i].l.norm_sq(); });
    const double slu =
        pairwise_sum(0, n, [&](std::int64_t i) { return inner(samples[i].l, samples[i].u).real(); });
    const double suv =
        pairwise_sum(0, n, [&](std::int64_t i) { return inner(samples[i].u, samples[i].v).real(); });

    CalibrationResult best;
    best.grid_n = grid_n;
    best.trials = trials;
    best.seed = seed;
    double best_res = -1.0;
    for (int eps : {+1, -1}) {
        const double kappa = (eps * slu - suv) / suu;
        // residual evaluated directly at the optimum; the expanded quadratic
        // form cancels catastrophically at machine-zero minima
        const double res_sq = pairwise_sum(0, n, [&](std::int64_t i) {
            const SpinorMinus r =
                samples[i].l - double(eps) * (kappa * samples[i].u + samples[i].v);
            return r.norm_sq();
        });
        const double res = std::sqrt(res_sq / sll);
        if (best_res < 0.0 || res < best_res) {
            best_res = res;
            best.kappa = kappa;
            best.epsilon = eps;
            best.residual_rel = res;
        }
    }
    return best;
}

} // namespace spinsq
