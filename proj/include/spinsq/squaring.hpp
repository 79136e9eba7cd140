#pragma once

// The squaring map sigma : W+ -> Lambda+ and its pointwise inversion.
// In the canonical trivialization, with phi = (a, b),
//   sigma(phi) = (|a|^2 - |b|^2) w1 + 2 Re(conj(a) b) w2 + 2 Im(conj(a) b) w3,
// which equals kSigmaScale * sum_k <i gamma(w_k) phi, phi> w_k and satisfies
// |sigma(phi)| = sqrt(2) |phi|^2, sigma(e^{i t} phi) = sigma(phi).

#include <cmath>
#include <complex>

#include "spinsq/clifford.hpp"
#include "spinsq/conventions.hpp"
#include "spinsq/errors.hpp"
#include "spinsq/forms.hpp"

namespace spinsq {

inline SDForm sigma(const SpinorPlus& phi) {
    const cplx ab = std::conj(phi.a) * phi.b;
    return {{std::norm(phi.a) - std::norm(phi.b), 2.0 * ab.real(), 2.0 * ab.imag()}};
}

/// sigma(phi) = r (n1 w1 + n2 w2 + n3 w3) with r = |phi|^2; n is undefined
/// (zeroed, defined = false) when r = 0.
struct BlochData {
    double r = 0.0;
    double n[3]{};
    bool defined = false;
};

inline BlochData bloch(const SpinorPlus& phi) {
    BlochData d;
    d.r = phi.norm_sq();
    if (d.r == 0.0) return d;
    const SDForm s = sigma(phi);
    d.n[0] = s.s[0] / d.r;
    d.n[1] = s.s[1] / d.r;
    d.n[2] = s.s[2] / d.r;
    d.defined = true;
    return d;
}

/// Inverts sigma with the phase fixed by: first component real >= 0, or the
/// second real >= 0 if the first vanishes.  Throws DegenerateForm when
/// |alpha| <= tol.
inline SpinorPlus pointwise_preimage(const SDForm& alpha, double tol = 0.0) {
    const double n = alpha.norm();
    if (!(n > tol) || n == 0.0) throw DegenerateForm("pointwise_preimage: form norm below tolerance");
    const double rho = n / std::sqrt(2.0); // = |phi|^2
    const double s1 = alpha.s[0], s2 = alpha.s[1], s3 = alpha.s[2];
    // a^2 = (rho + s1)/2, computed cancellation-free when s1 < 0
    double asq;
    if (s1 >= 0.0)
        asq = 0.5 * (rho + s1);
    else
        asq = 0.5 * (s2 * s2 + s3 * s3) / (rho - s1);
    const double a = std::sqrt(asq);
    if (a > 0.0) return {cplx{a, 0.0}, cplx{s2 / (2.0 * a), s3 / (2.0 * a)}};
    return {cplx{0.0, 0.0}, cplx{std::sqrt(rho), 0.0}};
}

} // namespace spinsq
