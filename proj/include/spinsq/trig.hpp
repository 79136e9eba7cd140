#pragma once

// Band-limited trigonometric polynomials on T^4 with exact derivatives,
// used wherever a smooth field must be evaluated off-grid (link midpoints)
// or differentiated without discretization error (calibration oracle,
// manufactured convergence data).

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "spinsq/grid.hpp"

namespace spinsq {

struct TrigMode {
    std::array<int, 4> k{};
    std::complex<double> coeff{};
};

class TrigScalar {
  public:
    TrigScalar() = default;
    explicit TrigScalar(std::vector<TrigMode> modes, std::array<double, 4> periods = {1, 1, 1, 1})
        : modes_(std::move(modes)), period_(periods) {}

    std::complex<double> eval(const std::array<double, 4>& x) const {
        std::complex<double> f{};
        for (const auto& m : modes_) f += m.coeff * phase(m.k, x);
        return f;
    }
    /// Exact partial derivative d/dx_mu.
    std::complex<double> eval_deriv(int mu, const std::array<double, 4>& x) const {
        const std::complex<double> i{0.0, 1.0};
        std::complex<double> f{};
        for (const auto& m : modes_)
            f += m.coeff * (i * (2.0 * M_PI * m.k[mu] / period_[mu])) * phase(m.k, x);
        return f;
    }
    double eval_re(const std::array<double, 4>& x) const { return eval(x).real(); }
    double eval_deriv_re(int mu, const std::array<double, 4>& x) const { return eval_deriv(mu, x).real(); }

    const std::vector<TrigMode>& modes() const { return modes_; }

  private:
    std::complex<double> phase(const std::array<int, 4>& k, const std::array<double, 4>& x) const {
        double arg = 0.0;
        for (int mu = 0; mu < 4; ++mu) arg += 2.0 * M_PI * k[mu] * x[mu] / period_[mu];
        return {std::cos(arg), std::sin(arg)};
    }
    std::vector<TrigMode> modes_;
    std::array<double, 4> period_{1, 1, 1, 1};
};

/// All modes with sum_mu |k_mu| <= max_degree, i.i.d. complex normal
/// coefficients scaled by `amplitude`.
inline TrigScalar random_trig_scalar(std::mt19937_64& rng, double amplitude, int max_degree = 2,
                                     std::array<double, 4> periods = {1, 1, 1, 1}) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<TrigMode> modes;
    for (int k0 = -max_degree; k0 <= max_degree; ++k0)
        for (int k1 = -max_degree; k1 <= max_degree; ++k1)
            for (int k2 = -max_degree; k2 <= max_degree; ++k2)
                for (int k3 = -max_degree; k3 <= max_degree; ++k3) {
                    if (std::abs(k0) + std::abs(k1) + std::abs(k2) + std::abs(k3) > max_degree) continue;
                    const double re = gauss(rng), im = gauss(rng);
                    modes.push_back({{k0, k1, k2, k3}, amplitude * std::complex<double>{re, im}});
                }
    return TrigScalar(std::move(modes), periods);
}

/// A pair of trig scalars standing for a smooth W+ spinor field.
struct TrigSpinor {
    TrigScalar a, b;
};

inline TrigSpinor random_trig_spinor(std::mt19937_64& rng, double amplitude, int max_degree = 2,
                                     std::array<double, 4> periods = {1, 1, 1, 1}) {
    TrigSpinor s;
    s.a = random_trig_scalar(rng, amplitude, max_degree, periods);
    s.b = random_trig_scalar(rng, amplitude, max_degree, periods);
    return s;
}

/// Four trig scalars used as a real 1-form through eval_re.
struct TrigOneForm {
    std::array<TrigScalar, 4> comp;

    double eval_re(int mu, const std::array<double, 4>& x) const { return comp[mu].eval_re(x); }
};

inline TrigOneForm random_trig_one_form(std::mt19937_64& rng, double amplitude, int max_degree = 2,
                                        std::array<double, 4> periods = {1, 1, 1, 1}) {
    TrigOneForm a;
    for (int mu = 0; mu < 4; ++mu) a.comp[mu] = random_trig_scalar(rng, amplitude, max_degree, periods);
    return a;
}

} // namespace spinsq
