#pragma once

// Global preimage of a nowhere-zero self-dual form field under sigma.
// Pointwise inversion always succeeds off zeros; the global obstruction is
// the phase: a greedy continuation along the lexicographic site order must
// leave every nearest-neighbor phase jump below pi/2, or no discretely
// continuous preimage exists and the degree data of the form is reported.

#include <variant>

#include "spinsq/topology.hpp"

namespace spinsq {

struct ObstructionReport {
    DegreeVector degrees{};           // sphere-map degrees of the input field
    double max_phase_jump = 0.0;      // largest |arg <phi(x+mu), phi(x)>| found
    std::array<int, 4> failure_site{};
    int failure_direction = 0;
};

using FieldPreimageResult = std::variant<SpinorField, ObstructionReport>;

/// Either a spinor field with sigma(field) = alpha to 1e-8 (scaled by the
/// grid-max |alpha|) at every site and nearest-neighbor phase jumps < pi/2,
/// or an ObstructionReport.  Throws DegenerateForm if any site is below tol.
FieldPreimageResult field_preimage(const SDFormField& alpha, double tol);

/// Scale-free default tolerance kDegenerateFactor * grid-max |alpha|.
FieldPreimageResult field_preimage(const SDFormField& alpha);

} // namespace spinsq
