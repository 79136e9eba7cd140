#pragma once

// U(1) lattice connections as unit-modulus link phases, gauge transforms,
// and flux quantization.  Links live on the determinant line bundle; the
// connection acts on W+ spinor fields through the covariant difference in
// operators.hpp.  u(x,mu) transports from site x+mu^ back to x.

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "spinsq/clifford.hpp"
#include "spinsq/grid.hpp"
#include "spinsq/trig.hpp"

namespace spinsq {

using SpinorField = Field<SpinorPlus>;
using SpinorMinusField = Field<SpinorMinus>;

// plane ordering shared by fluxes and degree vectors: (01,02,03,12,13,23)
inline constexpr int kPlaneA[6] = {0, 0, 0, 1, 1, 2};
inline constexpr int kPlaneB[6] = {1, 2, 3, 2, 3, 3};

class U1Connection {
  public:
    U1Connection() = default;
    explicit U1Connection(const LatticeGrid& g)
        : grid_(g), u_(size_t(4 * g.volume()), cplx{1.0, 0.0}) {}

    static U1Connection trivial(const LatticeGrid& g) { return U1Connection(g); }

    /// Constant-curvature connection with integer flux k in each coordinate
    /// plane: every (mu,nu)-plaquette carries phase 2 pi k_{munu} / (N_mu N_nu).
    static U1Connection from_flux(const LatticeGrid& g, const std::array<int, 6>& k);

    /// Ingest a smooth real 1-form by midpoint exponentiation:
    /// u(x,mu) = exp(i h_mu A_mu(x + mu^ h_mu/2)).
    static U1Connection from_one_form(const LatticeGrid& g, const TrigOneForm& a);

    /// Uniform random link phases ("hot" start).
    static U1Connection random(const LatticeGrid& g, std::mt19937_64& rng);

    const LatticeGrid& grid() const { return grid_; }
    cplx& link(std::int64_t site, int mu) { return u_[size_t(mu * grid_.volume() + site)]; }
    const cplx& link(std::int64_t site, int mu) const { return u_[size_t(mu * grid_.volume() + site)]; }
    const cplx* direction_data(int mu) const { return u_.data() + size_t(mu) * size_t(grid_.volume()); }
    cplx* direction_data(int mu) { return u_.data() + size_t(mu) * size_t(grid_.volume()); }

    /// Plaquette phase product at x in the (mu,nu) plane.
    cplx plaquette(std::array<int, 4> x, int mu, int nu) const;

    const std::optional<std::array<int, 6>>& declared_flux() const { return declared_flux_; }

  private:
    LatticeGrid grid_;
    std::vector<cplx> u_;
    std::optional<std::array<int, 6>> declared_flux_;
};

struct GaugeTransform {
    explicit GaugeTransform(const LatticeGrid& g) : phases(g, cplx{1.0, 0.0}) {}
    Field<cplx> phases;

    static GaugeTransform random(const LatticeGrid& g, std::mt19937_64& rng);
};

/// phi'(x) = s(x) phi(x),  u'(x,mu) = s(x) u(x,mu) s(x+mu^)^{-1}.
std::pair<U1Connection, SpinorField> gauge_apply(const GaugeTransform& s, const U1Connection& a,
                                                 const SpinorField& phi);

/// Per-plane sums of principal-branch plaquette phases / 2pi over a full
/// 2-torus slice, rounded to integers.  Independent of the slice chosen
/// (asserted over all slices); throws NonQuantizedFlux when a sum deviates
/// from an integer by more than 1e-6 or slices disagree.
std::array<int, 6> flux_integers(const U1Connection& a);

} // namespace spinsq
