#pragma once

// Pointwise exterior algebra of oriented Euclidean R^4: Hodge star on
// 2-forms, self-dual / anti-self-dual splitting, wedge products, and
// almost-complex structures extracted from nowhere-zero self-dual forms.
//
// TwoForm components are ordered (01,02,03,12,13,23) in an orthonormal
// coframe e^0..e^3 with vol = e^0^e^1^e^2^e^3; the e^i^e^j are declared
// orthonormal, so |w_k| = sqrt(2) for the self-dual basis
//     w1 = e01 + e23,  w2 = e02 + e31,  w3 = e03 + e12.

#include <cmath>

#include "spinsq/errors.hpp"

namespace spinsq {

struct TwoForm {
    double c[6]{}; // (01,02,03,12,13,23)

    double norm_sq() const {
        return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3] + c[4] * c[4] + c[5] * c[5];
    }
    double norm() const { return std::sqrt(norm_sq()); }
};

/// Self-dual 2-form in the (w1, w2, w3) basis.
struct SDForm {
    double s[3]{};

    double norm_sq() const { return 2.0 * (s[0] * s[0] + s[1] * s[1] + s[2] * s[2]); }
    double norm() const { return std::sqrt(norm_sq()); }
};

struct OneForm {
    double t[4]{};

    double norm_sq() const { return t[0] * t[0] + t[1] * t[1] + t[2] * t[2] + t[3] * t[3]; }
};

/// 3-form components ordered (012,013,023,123).
struct ThreeForm {
    double t[4]{};

    double norm_sq() const { return t[0] * t[0] + t[1] * t[1] + t[2] * t[2] + t[3] * t[3]; }
};

inline TwoForm operator+(const TwoForm& x, const TwoForm& y) {
    TwoForm r;
    for (int i = 0; i < 6; ++i) r.c[i] = x.c[i] + y.c[i];
    return r;
}
inline TwoForm operator-(const TwoForm& x, const TwoForm& y) {
    TwoForm r;
    for (int i = 0; i < 6; ++i) r.c[i] = x.c[i] - y.c[i];
    return r;
}
inline TwoForm operator*(double z, const TwoForm& x) {
    TwoForm r;
    for (int i = 0; i < 6; ++i) r.c[i] = z * x.c[i];
    return r;
}
inline SDForm operator+(const SDForm& x, const SDForm& y) { return {{x.s[0] + y.s[0], x.s[1] + y.s[1], x.s[2] + y.s[2]}}; }
inline SDForm operator-(const SDForm& x, const SDForm& y) { return {{x.s[0] - y.s[0], x.s[1] - y.s[1], x.s[2] - y.s[2]}}; }
inline SDForm operator*(double z, const SDForm& x) { return {{z * x.s[0], z * x.s[1], z * x.s[2]}}; }

inline const SDForm kOmega1{{1, 0, 0}};
inline const SDForm kOmega2{{0, 1, 0}};
inline const SDForm kOmega3{{0, 0, 1}};

inline TwoForm to_two_form(const SDForm& a) {
    return {{a.s[0], a.s[1], a.s[2], a.s[2], -a.s[1], a.s[0]}};
}

/// Hodge star on 2-forms; ** = Id.
inline TwoForm hodge_star2(const TwoForm& b) {
    return {{b.c[5], -b.c[4], b.c[3], b.c[2], -b.c[1], b.c[0]}};
}

/// P+ = (Id + *)/2 in self-dual coordinates.
inline SDForm sd_project(const TwoForm& b) {
    return {{0.5 * (b.c[0] + b.c[5]), 0.5 * (b.c[1] - b.c[4]), 0.5 * (b.c[2] + b.c[3])}};
}

/// P- = (Id - *)/2, returned as a TwoForm.
inline TwoForm asd_project(const TwoForm& b) {
    return 0.5 * (b - hodge_star2(b));
}

/// Coefficient of vol in beta ^ delta.
inline double wedge22(const TwoForm& b, const TwoForm& d) {
    return b.c[0] * d.c[5] - b.c[1] * d.c[4] + b.c[2] * d.c[3] + b.c[3] * d.c[2] - b.c[4] * d.c[1] + b.c[5] * d.c[0];
}
inline double wedge22(const SDForm& b, const SDForm& d) {
    return 2.0 * (b.s[0] * d.s[0] + b.s[1] * d.s[1] + b.s[2] * d.s[2]);
}

/// Pointwise almost-complex structure, stored row-major: (Jv)^i = m[4i+j] v^j.
struct ACS {
    double m[16]{};
};

/// J from a nowhere-zero self-dual form: Jv = (i_v ahat)^sharp with
/// ahat = sqrt(2) a/|a|, so J^j_i = ahat_ij, J^2 = -Id and a(v, Jv) > 0.
inline ACS acs_from_sd(const SDForm& a, double tol = 0.0) {
    const double n = a.norm();
    if (!(n > tol) || n == 0.0) throw DegenerateForm("acs_from_sd: form norm below tolerance");
    const TwoForm ah = (std::sqrt(2.0) / n) * to_two_form(a);
    // antisymmetric component matrix ahat_ij
    const double A[4][4] = {{0, ah.c[0], ah.c[1], ah.c[2]},
                            {-ah.c[0], 0, ah.c[3], ah.c[4]},
                            {-ah.c[1], -ah.c[3], 0, ah.c[5]},
                            {-ah.c[2], -ah.c[4], -ah.c[5], 0}};
    ACS j;
    for (int r = 0; r < 4; ++r)
        for (int cidx = 0; cidx < 4; ++cidx) j.m[4 * r + cidx] = A[cidx][r]; // J = A^T
    return j;
}

/// Scalar c with g' = c g making |a|_{g'} = sqrt(2): c = (|a|/sqrt(2))^{1/2}.
inline double conformal_factor(const SDForm& a) {
    const double n = a.norm();
    if (n == 0.0) throw DegenerateForm("conformal_factor: zero form");
    return std::sqrt(n / std::sqrt(2.0));
}

} // namespace spinsq
