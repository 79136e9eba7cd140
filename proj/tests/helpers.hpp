#pragma once

#include <random>

#include "spinsq/clifford.hpp"
#include "spinsq/forms.hpp"

namespace spinsq::testing {

inline std::mt19937_64 seeded_rng(std::uint64_t seed = 12345) { return std::mt19937_64(seed); }

inline cplx random_cplx(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    const double re = g(rng), im = g(rng);
    return {re, im};
}

inline SpinorPlus random_spinor_plus(std::mt19937_64& rng) {
    return {random_cplx(rng), random_cplx(rng)};
}

inline SpinorMinus random_spinor_minus(std::mt19937_64& rng) {
    return {random_cplx(rng), random_cplx(rng)};
}

inline Covector random_covector(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Covector v;
    for (int mu = 0; mu < 4; ++mu) v.c[mu] = g(rng);
    return v;
}

inline TwoForm random_two_form(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    TwoForm b;
    for (int i = 0; i < 6; ++i) b.c[i] = g(rng);
    return b;
}

inline SDForm random_sd_form(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    return {{g(rng), g(rng), g(rng)}};
}

inline OneForm random_one_form(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    OneForm e;
    for (int i = 0; i < 4; ++i) e.t[i] = g(rng);
    return e;
}

inline double dist(const SpinorPlus& s, const SpinorPlus& t) { return std::sqrt((s - t).norm_sq()); }
inline double dist(const SpinorMinus& s, const SpinorMinus& t) { return std::sqrt((s - t).norm_sq()); }
inline double dist(const TwoForm& x, const TwoForm& y) { return (x - y).norm(); }
inline double dist(const SDForm& x, const SDForm& y) { return (x - y).norm(); }

} // namespace spinsq::testing
