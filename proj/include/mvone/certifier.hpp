#pragma once

#include "mvone/essentiality.hpp"
#include "mvone/mixed_volume.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mvone {

// Witness that every entry of a tuple fits, after translation, inside one
// volume-1 lattice simplex.
struct UnitCertificate {
    std::vector<Vec> translations;  // one per entry: entry + translation ⊆ simplex
    LatticePolytope simplex;        // n+1 vertices, normalized volume 1
};

// One reduction step: a critical essential subtuple certified inside its
// span U, with the remaining entries pushed to the quotient Z^n / U.
struct DecompositionStep {
    std::vector<int> indices;  // positions in the original tuple
    SublatticeFrame frame;
    UnitCertificate certificate;   // for the subtuple in frame coordinates
    PolytopeTuple quotient_tuple;  // remainder, projected along the frame
};

struct Theorem1Decomposition {
    std::vector<DecompositionStep> steps;
};

// Certify an essential n-tuple with mixed volume 1 by the shifting algorithm:
// project along an edge of the first entry, certify the zero-dimensional
// subtuples of the projection recursively, lift, and recurse on the reduced
// projection. `edge_index` selects which edge of the first entry seeds the
// top-level projection (any choice yields the same certificate up to a
// common translation). Throws NotEssential or NotMixedVolumeOne.
UnitCertificate certify_unit(const PolytopeTuple& a, std::size_t edge_index = 0);

// Fiber translations c_2..c_m placing a lifted tuple in Z^m⊕Z^1 (fiber last)
// into one volume-1 simplex, given a certificate of its projection. The first
// entry stays fixed. Throws NoLift when no vertex choice assembles a simplex.
struct LiftResult {
    std::vector<Int> heights;  // per entry; heights[0] == 0
    LatticePolytope simplex;   // in the lifted coordinates
};
LiftResult lift_translations(const PolytopeTuple& lifted, const UnitCertificate& base_certificate);

// Full reduction of an arbitrary n-tuple with mixed volume 1.
Theorem1Decomposition decompose_theorem1(const PolytopeTuple& a);

bool verify_certificate(const PolytopeTuple& a, const UnitCertificate& c);

// Volume-1 simplices in Z^n containing translates of all axis unit segments,
// counted up to translation; closed form 2^n (n+1)^(n-2).
std::int64_t count_unit_simplices_containing_axes(int n);

// True when the two certificates' translation lists differ by one common vector.
bool uniqueness_check(const PolytopeTuple& a, const UnitCertificate& c1, const UnitCertificate& c2);

}  // namespace mvone
