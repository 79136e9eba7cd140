#pragma once

// Single-file field archives: a short text header followed by the raw
// little-endian payload.  Round trips are bit-identical.  Header layout:
//
//   spinsq-field 1
//   kind <spinor+|spinor-|oneform|twoform|sdform|threeform|links|gauge|spheremap>
//   dims n0 n1 n2 n3
//   periods p0 p1 p2 p3
//   dtype <complex128|float64>
//   components <count>
//   order lex3 components-innermost little-endian
//   payload <byte count>
//   <raw bytes>
//
// Sites are ordered lexicographically with axis 3 fastest, components
// innermost (for links, the four directions are the components).

#include <string>

#include "spinsq/gauge.hpp"
#include "spinsq/operators.hpp"
#include "spinsq/topology.hpp"

namespace spinsq {

enum class FieldKind { SpinorP, SpinorM, OneForm, TwoForm, SDForm, ThreeForm, Links, Gauge, SphereMap };

std::string to_string(FieldKind k);

struct ArchiveInfo {
    int version = 1;
    FieldKind kind{};
    LatticeGrid grid;
    std::string dtype;
    int components = 0;
};

/// Peek at a header without loading the payload.
ArchiveInfo archive_info(const std::string& path);

void save(const std::string& path, const SpinorField& f);
void save(const std::string& path, const SpinorMinusField& f);
void save(const std::string& path, const OneFormField& f);
void save(const std::string& path, const TwoFormField& f);
void save(const std::string& path, const SDFormField& f);
void save(const std::string& path, const ThreeFormField& f);
void save(const std::string& path, const SphereMapField& f);
void save(const std::string& path, const U1Connection& a);
void save(const std::string& path, const GaugeTransform& s);

SpinorField load_spinor_plus(const std::string& path);
SpinorMinusField load_spinor_minus(const std::string& path);
OneFormField load_one_form(const std::string& path);
TwoFormField load_two_form(const std::string& path);
SDFormField load_sd_form(const std::string& path);
ThreeFormField load_three_form(const std::string& path);
SphereMapField load_sphere_map(const std::string& path);
U1Connection load_links(const std::string& path);
GaugeTransform load_gauge(const std::string& path);

} // namespace spinsq
