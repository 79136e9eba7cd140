#pragma once

// Pointwise Clifford algebra of Euclidean R^4 acting on W = W+ (+) W-,
// with the geometers' sign convention v.v = -|v|^2.
//
// Gamma matrices are block off-diagonal,
//     gamma_mu = [ 0        -T_mu^dag ]
//                [ T_mu      0        ]
// with blocks T_mu : W+ -> W-.  This repository fixes
//     T_0 = Id,  T_1 = i s3,  T_2 = i s1,  T_3 = i s2   (s_k Pauli),
// the unique-up-to-equivalence choice under which the volume element
// gamma_0 gamma_1 gamma_2 gamma_3 is -Id on W+ and +Id on W-, self-dual
// forms act nontrivially on W+, anti-self-dual forms annihilate it, and
// gamma(w_1) gamma(w_2) = +2 gamma(w_3) on W+ (see conventions.hpp).

#include <array>
#include <complex>

#include "spinsq/forms.hpp"

namespace spinsq {

using cplx = std::complex<double>;

struct Covector {
    double c[4]{};
};

/// Fiber of W+: a pair of complex components in the fixed trivialization.
struct SpinorPlus {
    cplx a{}, b{};

    double norm_sq() const { return std::norm(a) + std::norm(b); }
};

/// Fiber of W-.
struct SpinorMinus {
    cplx p{}, q{};

    double norm_sq() const { return std::norm(p) + std::norm(q); }
};

inline SpinorPlus operator+(const SpinorPlus& s, const SpinorPlus& t) { return {s.a + t.a, s.b + t.b}; }
inline SpinorPlus operator-(const SpinorPlus& s, const SpinorPlus& t) { return {s.a - t.a, s.b - t.b}; }
inline SpinorPlus operator*(cplx z, const SpinorPlus& s) { return {z * s.a, z * s.b}; }
inline SpinorPlus operator*(double z, const SpinorPlus& s) { return {z * s.a, z * s.b}; }
inline SpinorMinus operator+(const SpinorMinus& s, const SpinorMinus& t) { return {s.p + t.p, s.q + t.q}; }
inline SpinorMinus operator-(const SpinorMinus& s, const SpinorMinus& t) { return {s.p - t.p, s.q - t.q}; }
inline SpinorMinus operator*(cplx z, const SpinorMinus& s) { return {z * s.p, z * s.q}; }
inline SpinorMinus operator*(double z, const SpinorMinus& s) { return {z * s.p, z * s.q}; }

/// Hermitian inner product, linear in the first slot.
inline cplx inner(const SpinorPlus& s, const SpinorPlus& t) {
    return s.a * std::conj(t.a) + s.b * std::conj(t.b);
}
inline cplx inner(const SpinorMinus& s, const SpinorMinus& t) {
    return s.p * std::conj(t.p) + s.q * std::conj(t.q);
}
inline double real_inner(const SpinorPlus& s, const SpinorPlus& t) { return inner(s, t).real(); }
inline double real_inner(const SpinorMinus& s, const SpinorMinus& t) { return inner(s, t).real(); }

/// The four 2x2 blocks T_mu : W+ -> W-, row-major.
/// apply(mu, phi) multiplies by T_mu, apply_back(mu, psi) by -T_mu^dag.
struct GammaSet {
    std::array<std::array<cplx, 4>, 4> block;

    static GammaSet canonical() {
        const cplx i{0.0, 1.0};
        GammaSet g;
        g.block[0] = {cplx{1}, cplx{0}, cplx{0}, cplx{1}};  // Id
        g.block[1] = {i, cplx{0}, cplx{0}, -i};             // i s3
        g.block[2] = {cplx{0}, i, i, cplx{0}};              // i s1
        g.block[3] = {cplx{0}, cplx{1}, cplx{-1}, cplx{0}}; // i s2
        return g;
    }

    SpinorMinus apply(int mu, const SpinorPlus& s) const {
        const auto& m = block[mu];
        return {m[0] * s.a + m[1] * s.b, m[2] * s.a + m[3] * s.b};
    }

    SpinorPlus apply_back(int mu, const SpinorMinus& s) const {
        const auto& m = block[mu]; // -T^dag = -conj(transpose)
        return {-std::conj(m[0]) * s.p - std::conj(m[2]) * s.q,
                -std::conj(m[1]) * s.p - std::conj(m[3]) * s.q};
    }
};

/// Clifford action of a covector, W+ -> W-:  (sum_mu v_mu T_mu) phi.
/// Hardwired to the canonical GammaSet.
inline SpinorMinus gamma_vec(const Covector& v, const SpinorPlus& s) {
    const cplx i{0.0, 1.0};
    // T0 = Id, T1 = i s3, T2 = i s1, T3 = i s2
    return {v.c[0] * s.a + v.c[1] * (i * s.a) + v.c[2] * (i * s.b) + v.c[3] * s.b,
            v.c[0] * s.b - v.c[1] * (i * s.b) + v.c[2] * (i * s.a) - v.c[3] * s.a};
}

/// Clifford action of a covector, W- -> W+:  (sum_mu v_mu (-T_mu^dag)) psi.
inline SpinorPlus gamma_vec_back(const Covector& v, const SpinorMinus& s) {
    const cplx i{0.0, 1.0};
    return {-v.c[0] * s.p + v.c[1] * (i * s.p) + v.c[2] * (i * s.q) + v.c[3] * s.q,
            -v.c[0] * s.q - v.c[1] * (i * s.q) + v.c[2] * (i * s.p) - v.c[3] * s.p};
}

/// W+ action of a 2-form, gamma(e^i ^ e^j) = gamma_i gamma_j (i < j);
/// the W+ -> W+ block of gamma_i gamma_j is -T_i^dag T_j.
inline SpinorPlus gamma_2form(const TwoForm& beta, const SpinorPlus& s) {
    static const GammaSet g = GammaSet::canonical();
    constexpr int pair_i[6] = {0, 0, 0, 1, 1, 2};
    constexpr int pair_j[6] = {1, 2, 3, 2, 3, 3};
    SpinorPlus out{};
    for (int p = 0; p < 6; ++p) {
        if (beta.c[p] == 0.0) continue;
        const auto& ti = g.block[pair_i[p]];
        const auto& tj = g.block[pair_j[p]];
        // -T_i^dag T_j, assembled from the stored blocks
        const cplx m00 = -(std::conj(ti[0]) * tj[0] + std::conj(ti[2]) * tj[2]);
        const cplx m01 = -(std::conj(ti[0]) * tj[1] + std::conj(ti[2]) * tj[3]);
        const cplx m10 = -(std::conj(ti[1]) * tj[0] + std::conj(ti[3]) * tj[2]);
        const cplx m11 = -(std::conj(ti[1]) * tj[1] + std::conj(ti[3]) * tj[3]);
        out.a += beta.c[p] * (m00 * s.a + m01 * s.b);
        out.b += beta.c[p] * (m10 * s.a + m11 * s.b);
    }
    return out;
}

/// W- action of a 2-form; the W- -> W- block of gamma_i gamma_j is -T_i T_j^dag.
inline SpinorMinus gamma_2form_minus(const TwoForm& beta, const SpinorMinus& s) {
    static const GammaSet g = GammaSet::canonical();
    constexpr int pair_i[6] = {0, 0, 0, 1, 1, 2};
    constexpr int pair_j[6] = {1, 2, 3, 2, 3, 3};
    SpinorMinus out{};
    for (int p = 0; p < 6; ++p) {
        if (beta.c[p] == 0.0) continue;
        const auto& ti = g.block[pair_i[p]];
        const auto& tj = g.block[pair_j[p]];
        const cplx m00 = -(ti[0] * std::conj(tj[0]) + ti[1] * std::conj(tj[1]));
        const cplx m01 = -(ti[0] * std::conj(tj[2]) + ti[1] * std::conj(tj[3]));
        const cplx m10 = -(ti[2] * std::conj(tj[0]) + ti[3] * std::conj(tj[1]));
        const cplx m11 = -(ti[2] * std::conj(tj[2]) + ti[3] * std::conj(tj[3]));
        out.p += beta.c[p] * (m00 * s.p + m01 * s.q);
        out.q += beta.c[p] * (m10 * s.p + m11 * s.q);
    }
    return out;
}

} // namespace spinsq
