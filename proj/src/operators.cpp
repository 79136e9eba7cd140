#include "spinsq/operators.hpp"

#include <cmath>

namespace spinsq {

namespace {

// forward/backward neighbor index offsets along axis mu for a fixed site
struct NeighborWalk {
    const LatticeGrid& g;
    std::array<std::int64_t, 4> stride;
    explicit NeighborWalk(const LatticeGrid& grid) : g(grid), stride(grid.strides()) {}

    std::int64_t fwd(std::int64_t i, const std::array<int, 4>& x, int mu) const {
        return (x[mu] + 1 == g.n[mu]) ? i - std::int64_t(g.n[mu] - 1) * stride[mu] : i + stride[mu];
    }
    std::int64_t bwd(std::int64_t i, const std::array<int, 4>& x, int mu) const {
        return (x[mu] == 0) ? i + std::int64_t(g.n[mu] - 1) * stride[mu] : i - stride[mu];
    }
};

template <class T>
double field_norm_sq_term(const Field<T>& f, std::int64_t i);

template <>
double field_norm_sq_term(const Field<SpinorPlus>& f, std::int64_t i) { return f[i].norm_sq(); }
template <>
double field_norm_sq_term(const Field<SpinorMinus>& f, std::int64_t i) { return f[i].norm_sq(); }
template <>
double field_norm_sq_term(const Field<OneForm>& f, std::int64_t i) { return f[i].norm_sq(); }
template <>
double field_norm_sq_term(const Field<TwoForm>& f, std::int64_t i) { return f[i].norm_sq(); }
template <>
double field_norm_sq_term(const Field<ThreeForm>& f, std::int64_t i) { return f[i].norm_sq(); }

template <class T>
double l2_norm_impl(const Field<T>& f) {
    const double s = pairwise_sum(0, f.size(), [&](std::int64_t i) { return field_norm_sq_term(f, i); });
    return std::sqrt(f.grid().volume_element() * s);
}

} // namespace

double l2_norm(const SpinorField& f) { return l2_norm_impl(f); }
double l2_norm(const SpinorMinusField& f) { return l2_norm_impl(f); }
double l2_norm(const OneFormField& f) { return l2_norm_impl(f); }
double l2_norm(const TwoFormField& f) { return l2_norm_impl(f); }
double l2_norm(const ThreeFormField& f) { return l2_norm_impl(f); }

cplx l2_inner(const SpinorField& x, const SpinorField& y) {
    require_same_grid(x.grid(), y.grid(), "l2_inner");
    const double re = pairwise_sum(0, x.size(), [&](std::int64_t i) { return inner(x[i], y[i]).real(); });
    const double im = pairwise_sum(0, x.size(), [&](std::int64_t i) { return inner(x[i], y[i]).imag(); });
    return x.grid().volume_element() * cplx{re, im};
}

cplx l2_inner(const SpinorMinusField& x, const SpinorMinusField& y) {
    require_same_grid(x.grid(), y.grid(), "l2_inner");
    const double re = pairwise_sum(0, x.size(), [&](std::int64_t i) { return inner(x[i], y[i]).real(); });
    const double im = pairwise_sum(0, x.size(), [&](std::int64_t i) { return inner(x[i], y[i]).imag(); });
    return x.grid().volume_element() * cplx{re, im};
}

double l2_inner(const OneFormField& x, const OneFormField& y) {
    require_same_grid(x.grid(), y.grid(), "l2_inner");
    return x.grid().volume_element() * pairwise_sum(0, x.size(), [&](std::int64_t i) {
               double s = 0.0;
               for (int c = 0; c < 4; ++c) s += x[i].t[c] * y[i].t[c];
               return s;
           });
}

double l2_inner(const TwoFormField& x, const TwoFormField& y) {
    require_same_grid(x.grid(), y.grid(), "l2_inner");
    return x.grid().volume_element() * pairwise_sum(0, x.size(), [&](std::int64_t i) {
               double s = 0.0;
               for (int c = 0; c < 6; ++c) s += x[i].c[c] * y[i].c[c];
               return s;
           });
}

namespace {

template <class S>
Field<S> cov_deriv_impl(const U1Connection& a, const Field<S>& f, int mu) {
    require_same_grid(a.grid(), f.grid(), "cov_deriv");
    const LatticeGrid& g = f.grid();
    Field<S> out(g);
    const NeighborWalk w(g);
    const double inv2h = 1.0 / (2.0 * g.spacing(mu));
    const cplx* u = a.direction_data(mu);
    for (std::int64_t i = 0; i < g.volume(); ++i) {
        const auto x = g.site(i);
        const std::int64_t ip = w.fwd(i, x, mu), im = w.bwd(i, x, mu);
        out[i] = inv2h * (u[i] * f[ip] - std::conj(u[im]) * f[im]);
    }
    return out;
}

} // namespace

SpinorField cov_deriv(const U1Connection& a, const SpinorField& phi, int mu) {
    return cov_deriv_impl(a, phi, mu);
}
SpinorMinusField cov_deriv(const U1Connection& a, const SpinorMinusField& psi, int mu) {
    return cov_deriv_impl(a, psi, mu);
}

void dirac_apply(const U1Connection& a, const SpinorField& in, SpinorMinusField& out) {
    require_same_grid(a.grid(), in.grid(), "dirac");
    require_same_grid(a.grid(), out.grid(), "dirac");
    const LatticeGrid& g = in.grid();
    const auto st = g.strides();
    const int n0 = g.n[0], n1 = g.n[1], n2 = g.n[2], n3 = g.n[3];
    const double inv2h[4] = {1.0 / (2.0 * g.spacing(0)), 1.0 / (2.0 * g.spacing(1)),
                             1.0 / (2.0 * g.spacing(2)), 1.0 / (2.0 * g.spacing(3))};
    const cplx* u[4] = {a.direction_data(0), a.direction_data(1), a.direction_data(2),
                        a.direction_data(3)};
    const SpinorPlus* fin = in.data();
    SpinorMinus* fout = out.data();
    const cplx I{0.0, 1.0};

    for (int x0 = 0; x0 < n0; ++x0) {
        const std::int64_t d0p = (x0 + 1 == n0) ? -std::int64_t(n0 - 1) * st[0] : st[0];
        const std::int64_t d0m = (x0 == 0) ? std::int64_t(n0 - 1) * st[0] : -st[0];
        for (int x1 = 0; x1 < n1; ++x1) {
            const std::int64_t d1p = (x1 + 1 == n1) ? -std::int64_t(n1 - 1) * st[1] : st[1];
            const std::int64_t d1m = (x1 == 0) ? std::int64_t(n1 - 1) * st[1] : -st[1];
            for (int x2 = 0; x2 < n2; ++x2) {
                const std::int64_t d2p = (x2 + 1 == n2) ? -std::int64_t(n2 - 1) * st[2] : st[2];
                const std::int64_t d2m = (x2 == 0) ? std::int64_t(n2 - 1) * st[2] : -st[2];
                const std::int64_t base = std::int64_t(x0) * st[0] + std::int64_t(x1) * st[1] +
                                          std::int64_t(x2) * st[2];
                for (int x3 = 0; x3 < n3; ++x3) {
                    const std::int64_t i = base + x3;
                    const std::int64_t d3p = (x3 + 1 == n3) ? -std::int64_t(n3 - 1) : 1;
                    const std::int64_t d3m = (x3 == 0) ? std::int64_t(n3 - 1) : -1;
                    const std::int64_t dp[4] = {d0p, d1p, d2p, d3p};
                    const std::int64_t dm[4] = {d0m, d1m, d2m, d3m};

                    cplx ca[4], cb[4]; // covariant differences per direction
                    for (int mu = 0; mu < 4; ++mu) {
                        const cplx up = u[mu][i];
                        const cplx um = std::conj(u[mu][i + dm[mu]]);
                        const SpinorPlus& f = fin[i + dp[mu]];
                        const SpinorPlus& bck = fin[i + dm[mu]];
                        ca[mu] = inv2h[mu] * (up * f.a - um * bck.a);
                        cb[mu] = inv2h[mu] * (up * f.b - um * bck.b);
                    }
                    // T0 = Id, T1 = i s3, T2 = i s1, T3 = i s2
                    fout[i].p = ca[0] + I * ca[1] + I * cb[2] + cb[3];
                    fout[i].q = cb[0] - I * cb[1] + I * ca[2] - ca[3];
                }
            }
        }
    }
}

void dirac_dag_apply(const U1Connection& a, const SpinorMinusField& in, SpinorField& out) {
    require_same_grid(a.grid(), in.grid(), "dirac_dag");
    require_same_grid(a.grid(), out.grid(), "dirac_dag");
    const LatticeGrid& g = in.grid();
    const auto st = g.strides();
    const int n0 = g.n[0], n1 = g.n[1], n2 = g.n[2], n3 = g.n[3];
    const double inv2h[4] = {1.0 / (2.0 * g.spacing(0)), 1.0 / (2.0 * g.spacing(1)),
                             1.0 / (2.0 * g.spacing(2)), 1.0 / (2.0 * g.spacing(3))};
    const cplx* u[4] = {a.direction_data(0), a.direction_data(1), a.direction_data(2),
                        a.direction_data(3)};
    const SpinorMinus* fin = in.data();
    SpinorPlus* fout = out.data();
    const cplx I{0.0, 1.0};

    for (int x0 = 0; x0 < n0; ++x0) {
        const std::int64_t d0p = (x0 + 1 == n0) ? -std::int64_t(n0 - 1) * st[0] : st[0];
        const std::int64_t d0m = (x0 == 0) ? std::int64_t(n0 - 1) * st[0] : -st[0];
        for (int x1 = 0; x1 < n1; ++x1) {
            const std::int64_t d1p = (x1 + 1 == n1) ? -std::int64_t(n1 - 1) * st[1] : st[1];
            const std::int64_t d1m = (x1 == 0) ? std::int64_t(n1 - 1) * st[1] : -st[1];
            for (int x2 = 0; x2 < n2; ++x2) {
                const std::int64_t d2p = (x2 + 1 == n2) ? -std::int64_t(n2 - 1) * st[2] : st[2];
                const std::int64_t d2m = (x2 == 0) ? std::int64_t(n2 - 1) * st[2] : -st[2];
                const std::int64_t base = std::int64_t(x0) * st[0] + std::int64_t(x1) * st[1] +
                                          std::int64_t(x2) * st[2];
                for (int x3 = 0; x3 < n3; ++x3) {
                    const std::int64_t i = base + x3;
                    const std::int64_t d3p = (x3 + 1 == n3) ? -std::int64_t(n3 - 1) : 1;
                    const std::int64_t d3m = (x3 == 0) ? std::int64_t(n3 - 1) : -1;
                    const std::int64_t dp[4] = {d0p, d1p, d2p, d3p};
                    const std::int64_t dm[4] = {d0m, d1m, d2m, d3m};

                    cplx cp[4], cq[4];
                    for (int mu = 0; mu < 4; ++mu) {
                        const cplx up = u[mu][i];
                        const cplx um = std::conj(u[mu][i + dm[mu]]);
                        const SpinorMinus& f = fin[i + dp[mu]];
                        const SpinorMinus& bck = fin[i + dm[mu]];
                        cp[mu] = inv2h[mu] * (up * f.p - um * bck.p);
                        cq[mu] = inv2h[mu] * (up * f.q - um * bck.q);
                    }
                    // blocks -T_mu^dag
                    fout[i].a = -cp[0] + I * cp[1] + I * cq[2] + cq[3];
                    fout[i].b = -cq[0] - I * cq[1] + I * cp[2] - cp[3];
                }
            }
        }
    }
}

SpinorMinusField dirac(const U1Connection& a, const SpinorField& phi) {
    SpinorMinusField out(phi.grid());
    dirac_apply(a, phi, out);
    return out;
}

SpinorField dirac_dag(const U1Connection& a, const SpinorMinusField& psi) {
    SpinorField out(psi.grid());
    dirac_dag_apply(a, psi, out);
    return out;
}

void ddagd_apply(const U1Connection& a, const SpinorField& in, SpinorField& out,
                 SpinorMinusField& scratch, double shift) {
    dirac_apply(a, in, scratch);
    dirac_dag_apply(a, scratch, out);
    if (shift != 0.0)
        for (std::int64_t i = 0; i < out.size(); ++i) out[i] = out[i] + shift * in[i];
}

namespace {

// central difference of a scalar component extracted by `get`
template <class T, class Get>
double cdiff(const Field<T>& f, const NeighborWalk& w, std::int64_t i, const std::array<int, 4>& x,
             int mu, Get&& get) {
    const double inv2h = 1.0 / (2.0 * f.grid().spacing(mu));
    return inv2h * (get(f[w.fwd(i, x, mu)]) - get(f[w.bwd(i, x, mu)]));
}

// TwoForm component beta_{munu}, antisymmetric extension of the 6 stored ones
inline double beta_at(const TwoForm& b, int mu, int nu) {
    static constexpr int slot[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    static constexpr double sgn[4][4] = {{0, 1, 1, 1}, {-1, 0, 1, 1}, {-1, -1, 0, 1}, {-1, -1, -1, 0}};
    if (mu == nu) return 0.0;
    return sgn[mu][nu] * b.c[slot[mu][nu]];
}

} // namespace

TwoFormField d1(const OneFormField& eta) {
    const LatticeGrid& g = eta.grid();
    TwoFormField out(g);
    const NeighborWalk w(g);
    for (std::int64_t i = 0; i < g.volume(); ++i) {
        const auto x = g.site(i);
        for (int p = 0; p < 6; ++p) {
            const int mu = kPlaneA[p], nu = kPlaneB[p];
            out[i].c[p] = cdiff(eta, w, i, x, mu, [&](const OneForm& f) { return f.t[nu]; }) -
                          cdiff(eta, w, i, x, nu, [&](const OneForm& f) { return f.t[mu]; });
        }
    }
    return out;
}

ThreeFormField d2(const TwoFormField& beta) {
    const LatticeGrid& g = beta.grid();
    ThreeFormField out(g);
    const NeighborWalk w(g);
    constexpr int trip[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    for (std::int64_t i = 0; i < g.volume(); ++i) {
        const auto x = g.site(i);
        for (int t = 0; t < 4; ++t) {
            const int l = trip[t][0], m = trip[t][1], n = trip[t][2];
            out[i].t[t] = cdiff(beta, w, i, x, l, [&](const TwoForm& f) { return beta_at(f, m, n); }) -
                          cdiff(beta, w, i, x, m, [&](const TwoForm& f) { return beta_at(f, l, n); }) +
                          cdiff(beta, w, i, x, n, [&](const TwoForm& f) { return beta_at(f, l, m); });
        }
    }
    return out;
}

OneFormField dstar2(const TwoFormField& beta) {
    const LatticeGrid& g = beta.grid();
    OneFormField out(g);
    const NeighborWalk w(g);
    for (std::int64_t i = 0; i < g.volume(); ++i) {
        const auto x = g.site(i);
        for (int nu = 0; nu < 4; ++nu) {
            double acc = 0.0;
            for (int mu = 0; mu < 4; ++mu) {
                if (mu == nu) continue;
                acc -= cdiff(beta, w, i, x, mu, [&](const TwoForm& f) { return beta_at(f, mu, nu); });
            }
            out[i].t[nu] = acc;
        }
    }
    return out;
}

TwoFormField to_two_form(const SDFormField& s) {
    TwoFormField out(s.grid());
    for (std::int64_t i = 0; i < s.size(); ++i) out[i] = to_two_form(s[i]);
    return out;
}

SDFormField sigma_field(const SpinorField& phi) {
    SDFormField out(phi.grid());
    for (std::int64_t i = 0; i < phi.size(); ++i) out[i] = sigma(phi[i]);
    return out;
}

OneFormField inner_one_form(const U1Connection& a, const SpinorField& phi) {
    require_same_grid(a.grid(), phi.grid(), "inner_one_form");
    OneFormField out(phi.grid());
    const cplx I{0.0, 1.0};
    for (int nu = 0; nu < 4; ++nu) {
        const SpinorField grad = cov_deriv(a, phi, nu);
        for (std::int64_t i = 0; i < phi.size(); ++i)
            out[i].t[nu] = real_inner(grad[i], I * phi[i]);
    }
    return out;
}

double identity_residual(const U1Connection& a, const SpinorField& phi) {
    require_same_grid(a.grid(), phi.grid(), "identity_residual");
    const LatticeGrid& g = phi.grid();
    const OneFormField ds = dstar2(to_two_form(sigma_field(phi)));
    const OneFormField rho = inner_one_form(a, phi);
    const SpinorMinusField dphi = dirac(a, phi);
    const cplx I{0.0, 1.0};
    const double c = conventions::kIdentityDstarScale;
    const double eps = conventions::kIdentitySign;

    const double sum = pairwise_sum(0, phi.size(), [&](std::int64_t i) {
        Covector tau;
        for (int nu = 0; nu < 4; ++nu) tau.c[nu] = c * ds[i].t[nu] + rho[i].t[nu];
        const SpinorMinus lhs = phi[i].norm_sq() * dphi[i];
        const SpinorMinus rhs = eps * gamma_vec(tau, I * phi[i]);
        return (lhs - rhs).norm_sq();
    });
    return std::sqrt(g.volume_element() * sum);
}

} // namespace spinsq
