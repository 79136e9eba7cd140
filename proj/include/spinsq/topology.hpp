#pragma once

// Degree data of nowhere-zero self-dual forms seen as maps to S^2: the
// computable pairing replacing the first-Chern-class comparison.  A
// nowhere-zero SDForm field has a unit Bloch direction per site; its degree
// over a coordinate 2-torus is the summed signed spherical area of the image
// triangles divided by 4 pi, an exact integer up to a rounding guard.

#include <array>

#include "spinsq/operators.hpp"

namespace spinsq {

using SphereMapField = Field<std::array<double, 3>>;

/// six mapping degrees, planes ordered (01,02,03,12,13,23)
using DegreeVector = std::array<int, 6>;

/// n(x) = alpha(x)/|alpha(x)| in the (w1,w2,w3) basis.  Throws DegenerateForm
/// naming the first offending site when some |alpha(x)| <= tol.
SphereMapField sphere_map(const SDFormField& alpha, double tol);

/// Convenience overload with the scale-free default tolerance
/// kDegenerateFactor * grid-max |alpha|.
SphereMapField sphere_map(const SDFormField& alpha);

struct Degree {
    int value = 0;
    double rounding_defect = 0.0; // |raw/4pi - value|
};

/// Degree of the restriction of n to the (mu,nu) 2-torus through `base`
/// (the two off-plane coordinates of base select the slice).  Throws
/// AntipodalEdge when adjacent image points are within 1e-9 of antipodal and
/// NonIntegerDegree when the area sum misses an integer by more than 1e-3.
Degree degree_2torus(const SphereMapField& n, int plane, std::array<int, 4> base = {0, 0, 0, 0});

/// All six degrees at base slice 0.
DegreeVector degree_vector(const SphereMapField& n);

/// Constant reference structure: the nowhere-zero self-dual form w1.
SDFormField reference_form(const LatticeGrid& g);

struct C1Comparison {
    bool equal = false;
    DegreeVector degrees_alpha{};
    DegreeVector degrees_ref{};
};

/// Degree-vector comparison of alpha against the reference (both nowhere
/// zero), with per-plane slice independence asserted across every slice.
C1Comparison c1_equal(const SDFormField& alpha, const SDFormField& ref);

} // namespace spinsq
