#pragma once

// Lattice differential operators on T^4: the gauge-covariant central
// difference, the Dirac operator D^A = sum_mu gamma(e^mu) grad_mu and its
// formal adjoint, flat exterior calculus (d on 1- and 2-forms, d* on
// 2-forms), and the residual of the differential identity
//   |phi|^2 D^A phi = i (2 d* sigma(phi) + <grad^A phi, i phi>) . phi .
// Central differences keep grad skew-adjoint, so <D phi, psi> = <phi, Ddag psi>
// holds to roundoff on any periodic grid.

#include "spinsq/conventions.hpp"
#include "spinsq/gauge.hpp"
#include "spinsq/squaring.hpp"

namespace spinsq {

using OneFormField = Field<OneForm>;
using TwoFormField = Field<TwoForm>;
using SDFormField = Field<SDForm>;
using ThreeFormField = Field<ThreeForm>;

// --- inner products / norms (volume-weighted, deterministic reductions) ---

double l2_norm(const SpinorField& f);
double l2_norm(const SpinorMinusField& f);
double l2_norm(const OneFormField& f);
double l2_norm(const TwoFormField& f);
double l2_norm(const ThreeFormField& f);
cplx l2_inner(const SpinorField& x, const SpinorField& y);
cplx l2_inner(const SpinorMinusField& x, const SpinorMinusField& y);
double l2_inner(const OneFormField& x, const OneFormField& y);
double l2_inner(const TwoFormField& x, const TwoFormField& y);

// --- covariant difference and Dirac operators ---

/// (grad_mu phi)(x) = [u(x,mu) phi(x+mu^) - u(x-mu^,mu)^{-1} phi(x-mu^)] / (2 h_mu)
SpinorField cov_deriv(const U1Connection& a, const SpinorField& phi, int mu);
SpinorMinusField cov_deriv(const U1Connection& a, const SpinorMinusField& psi, int mu);

void dirac_apply(const U1Connection& a, const SpinorField& in, SpinorMinusField& out);
void dirac_dag_apply(const U1Connection& a, const SpinorMinusField& in, SpinorField& out);
SpinorMinusField dirac(const U1Connection& a, const SpinorField& phi);
SpinorField dirac_dag(const U1Connection& a, const SpinorMinusField& psi);

/// out = (Ddag D + shift) in, using scratch for the intermediate W- field.
void ddagd_apply(const U1Connection& a, const SpinorField& in, SpinorField& out,
                 SpinorMinusField& scratch, double shift = 0.0);

// --- flat exterior calculus, central differences ---

TwoFormField d1(const OneFormField& eta);
ThreeFormField d2(const TwoFormField& beta);
/// (d* beta)_nu = -sum_mu partial_mu beta_{munu}
OneFormField dstar2(const TwoFormField& beta);

TwoFormField to_two_form(const SDFormField& s);
SDFormField sigma_field(const SpinorField& phi);

/// component nu = real_inner((grad_nu phi)(x), i phi(x))
OneFormField inner_one_form(const U1Connection& a, const SpinorField& phi);

/// L^2 norm of  |phi|^2 D^A phi - eps gamma(tau)(i phi)  with the calibrated
/// tau = kIdentityDstarScale * d* sigma(phi) + inner_one_form(a, phi).
double identity_residual(const U1Connection& a, const SpinorField& phi);

} // namespace spinsq
