#include "spinsq/harmonic.hpp"

#include <cmath>

#include "spinsq/calibrate.hpp"

namespace spinsq {

namespace {

void axpy(const cplx& alpha, const SpinorField& x, SpinorField& y) {
    for (std::int64_t i = 0; i < y.size(); ++i) y[i] = y[i] + alpha * x[i];
}

void scale(double alpha, SpinorField& x) {
    for (std::int64_t i = 0; i < x.size(); ++i) x[i] = alpha * x[i];
}

void project_out(const std::vector<const SpinorField*>& basis, SpinorField& x) {
    // twice-applied modified Gram-Schmidt
    for (int pass = 0; pass < 2; ++pass) {
        for (const SpinorField* v : basis) {
            const cplx ov = l2_inner(x, *v);
            const double nv = l2_norm(*v);
            if (nv > 0.0) axpy(-ov / (nv * nv), *v, x);
        }
    }
}

/// CG on (DdagD + shift) z = b from z = 0; returns iterations used.
int cg_solve(const U1Connection& a, const SpinorField& b, SpinorField& z, double shift,
             double rel_tol, int max_iter) {
    const LatticeGrid& g = b.grid();
    z = SpinorField(g, SpinorPlus{});
    SpinorField r = b;
    SpinorField p = r;
    SpinorField mp(g);
    SpinorMinusField scratch(g);
    double rr = l2_norm(r);
    rr *= rr;
    const double stop = rel_tol * rel_tol * rr;
    int it = 0;
    for (; it < max_iter && rr > stop && rr > 0.0; ++it) {
        ddagd_apply(a, p, mp, scratch, shift);
        const double pmp = l2_inner(p, mp).real();
        if (!(pmp > 0.0)) break;
        const double alpha = rr / pmp;
        axpy(alpha, p, z);
        axpy(-alpha, mp, r);
        const double rr_new = [&] {
            const double n = l2_norm(r);
            return n * n;
        }();
        const double beta = rr_new / rr;
        rr = rr_new;
        for (std::int64_t i = 0; i < p.size(); ++i) p[i] = r[i] + beta * p[i];
    }
    return it;
}

} // namespace

double mean_modulus(const SpinorField& phi) {
    const double s =
        pairwise_sum(0, phi.size(), [&](std::int64_t i) { return std::sqrt(phi[i].norm_sq()); });
    return s / double(phi.size());
}

double min_modulus(const SpinorField& phi) {
    double m = std::numeric_limits<double>::infinity();
    for (std::int64_t i = 0; i < phi.size(); ++i) m = std::min(m, std::sqrt(phi[i].norm_sq()));
    return m;
}

void normalize(SpinorField& phi) {
    const double n = l2_norm(phi);
    if (n > 0.0) scale(1.0 / n, phi);
}

SpinorField random_band_limited_spinor(const LatticeGrid& g, std::uint64_t seed, int max_degree) {
    std::mt19937_64 rng(seed);
    const TrigSpinor s = random_trig_spinor(rng, 1.0, max_degree, g.period);
    SpinorField f = sample_spinor(g, s);
    normalize(f);
    return f;
}

double site_variance(const SpinorField& phi) {
    cplx ma{}, mb{};
    for (std::int64_t i = 0; i < phi.size(); ++i) {
        ma += phi[i].a;
        mb += phi[i].b;
    }
    ma /= double(phi.size());
    mb /= double(phi.size());
    const SpinorPlus mean{ma, mb};
    const double var = pairwise_sum(0, phi.size(), [&](std::int64_t i) {
        return (phi[i] - mean).norm_sq();
    }) / double(phi.size());
    const double msq = pairwise_sum(0, phi.size(), [&](std::int64_t i) { return phi[i].norm_sq(); }) /
                       double(phi.size());
    return msq > 0.0 ? var / msq : 0.0;
}

std::pair<SpinorField, SolveReport> solve_smallest(const U1Connection& a, const SolveOptions& opt,
                                                   const std::vector<const SpinorField*>& deflate,
                                                   const SpinorField* initial) {
    if (!(opt.tol > 0.0)) throw Error("solve_smallest: tol must be positive");
    const LatticeGrid& g = a.grid();
    SpinorField phi = initial ? *initial : random_band_limited_spinor(g, opt.seed);
    require_same_grid(g, phi.grid(), "solve_smallest");
    project_out(deflate, phi);
    normalize(phi);

    SolveReport rep;
    SpinorField z(g), mz(g);
    SpinorMinusField scratch(g);
    double lambda_prev = -1.0;
    for (int outer = 0; outer < opt.max_outer; ++outer) {
        rep.cg_total += cg_solve(a, phi, z, opt.shift, opt.cg_tol, opt.max_inner);
        project_out(deflate, z);
        normalize(z);
        phi = z;
        ddagd_apply(a, phi, mz, scratch, 0.0);
        const double lambda = l2_inner(mz, phi).real();
        rep.rayleigh = lambda;
        rep.rayleigh_history.push_back(lambda);
        rep.iterations = outer + 1;

        // eigen-equation residual ||DdagD phi - lambda phi||
        SpinorField res = mz;
        axpy(cplx{-lambda, 0.0}, phi, res);
        rep.eig_residual = l2_norm(res);

        const double scale_ref = lambda + opt.shift;
        if (lambda_prev >= 0.0 && std::abs(lambda - lambda_prev) <= opt.tol * scale_ref &&
            rep.eig_residual <= std::sqrt(opt.tol) * scale_ref) {
            rep.converged = true;
            break;
        }
        lambda_prev = lambda;
    }
    rep.dirac_rel_residual = l2_norm(dirac(a, phi)) / l2_norm(phi);
    return {std::move(phi), rep};
}

ParallelCheck is_parallel(const U1Connection& a, const SpinorField& phi, double tol) {
    const double nphi = l2_norm(phi);
    if (nphi == 0.0) throw ZeroField("is_parallel: zero spinor field");
    double acc = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
        const double n = l2_norm(cov_deriv(a, phi, mu));
        acc += n * n;
    }
    ParallelCheck c;
    c.defect = std::sqrt(acc) / nphi;
    c.parallel = c.defect < tol;
    return c;
}

PipelineReport symplectic_pipeline(const U1Connection& a, const SpinorField& phi) {
    require_same_grid(a.grid(), phi.grid(), "symplectic_pipeline");
    PipelineReport rep;
    const SDFormField alpha = sigma_field(phi);
    const TwoFormField alpha2 = to_two_form(alpha);
    const OneFormField rho = inner_one_form(a, phi);

    const double nphi = l2_norm(phi);
    rep.dirac_rel_residual = nphi > 0.0 ? l2_norm(dirac(a, phi)) / nphi : 0.0;
    rep.transversality_norm = l2_norm(rho);
    rep.min_modulus = min_modulus(phi);
    rep.mean_modulus = mean_modulus(phi);
    rep.closedness_residual = l2_norm(d2(alpha2));

    const OneFormField ds = dstar2(alpha2);
    OneFormField tau(phi.grid());
    for (std::int64_t i = 0; i < tau.size(); ++i)
        for (int nu = 0; nu < 4; ++nu)
            tau[i].t[nu] = conventions::kIdentityDstarScale * ds[i].t[nu] + rho[i].t[nu];
    rep.corollary_residual = l2_norm(tau);

    rep.nowhere_zero = rep.min_modulus > conventions::kNowhereZeroFactor * rep.mean_modulus;
    if (rep.nowhere_zero) {
        double maxn = 0.0;
        for (std::int64_t i = 0; i < alpha.size(); ++i) maxn = std::max(maxn, alpha[i].norm());
        const double tol = conventions::kDegenerateFactor * maxn;
        double defect = 0.0;
        for (std::int64_t i = 0; i < alpha.size(); ++i) {
            const ACS j = acs_from_sd(alpha[i], tol);
            // || J^2 + Id ||_F
            double f = 0.0;
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) {
                    double e = (r == c) ? 1.0 : 0.0;
                    for (int k = 0; k < 4; ++k) e += j.m[4 * r + k] * j.m[4 * k + c];
                    f += e * e;
                }
            defect = std::max(defect, std::sqrt(f));
        }
        rep.acs_defect = defect;
        rep.degree_vector = degree_vector(sphere_map(alpha, tol));
    }
    return rep;
}

PipelineReport kahler_pipeline(const U1Connection& a, const SpinorField& phi, double parallel_tol) {
    PipelineReport rep = symplectic_pipeline(a, phi);
    const ParallelCheck pc = is_parallel(a, phi, parallel_tol);
    rep.parallel = pc.parallel;
    rep.parallel_defect = pc.defect;

    const SDFormField alpha = sigma_field(phi);
    SDForm mean{};
    for (std::int64_t i = 0; i < alpha.size(); ++i) mean = mean + alpha[i];
    mean = (1.0 / double(alpha.size())) * mean;
    double dev = 0.0;
    for (std::int64_t i = 0; i < alpha.size(); ++i) dev = std::max(dev, (alpha[i] - mean).norm());
    rep.sigma_constancy = dev;

    if (rep.nowhere_zero) {
        const double mc = pairwise_sum(0, alpha.size(), [&](std::int64_t i) {
            return conformal_factor(alpha[i]);
        }) / double(alpha.size());
        const double var = pairwise_sum(0, alpha.size(), [&](std::int64_t i) {
            const double d = conformal_factor(alpha[i]) - mc;
            return d * d;
        }) / double(alpha.size());
        rep.conformal_variance = var;
    }
    return rep;
}

} // namespace spinsq
