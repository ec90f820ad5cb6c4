#ifndef MVONE_LATTICE_HPP
#define MVONE_LATTICE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "mvone/linalg.hpp"
#include "mvone/numbers.hpp"

namespace mvone {

// Primitive integer linear functional.
struct Covector {
    Vec coeffs;
    explicit Covector(Vec c);
    Int operator()(const Vec& x) const { return dot(coeffs, x); }
};

// Integer affine map x -> linear*x + shift with |det linear| = 1.
struct UnimodularAffineMap {
    Mat linear;
    Vec shift;

    static UnimodularAffineMap identity_map(int n);
    Vec apply(const Vec& v) const;
    UnimodularAffineMap compose(const UnimodularAffineMap& inner) const;  // this ∘ inner
    UnimodularAffineMap inverse() const;
    int dim() const { return static_cast<int>(linear.size()); }
};

// Saturated rank-k sublattice of Z^n with an anchor point. `to_std` is a
// unimodular map of Z^n carrying anchor + span(basis) onto the first k
// coordinates (anchor to 0).
struct SublatticeFrame {
    int ambient_dim = 0;
    Mat basis;   // k rows of length n; a lattice basis of span(basis) ∩ Z^n
    Vec anchor;  // affine base point
    UnimodularAffineMap to_std;
    int rank() const { return static_cast<int>(basis.size()); }
};

// Convex lattice polytope, stored as its lex-sorted extreme points.
struct LatticePolytope {
    int dim = 0;
    std::vector<Vec> verts;

    bool operator==(const LatticePolytope& o) const { return dim == o.dim && verts == o.verts; }
    bool operator<(const LatticePolytope& o) const { return verts < o.verts; }
};

// Construction: exact hull by extreme-point filtering (rational LP membership).
LatticePolytope convex_hull(int dim, std::vector<Vec> points);
// For vertex sets already known to be extreme (faces, unimodular images).
LatticePolytope polytope_from_vertices(int dim, std::vector<Vec> verts);

bool in_convex_hull(const Vec& p, const std::vector<Vec>& pts);

Int support(const LatticePolytope& x, const Vec& alpha);
LatticePolytope face(const LatticePolytope& x, const Vec& alpha);
LatticePolytope minkowski_sum(const LatticePolytope& x, const LatticePolytope& y);
LatticePolytope translate(const LatticePolytope& x, const Vec& v);
LatticePolytope dilate(const LatticePolytope& x, const Int& c);
LatticePolytope apply_map(const UnimodularAffineMap& m, const LatticePolytope& x);

int affine_dim(const LatticePolytope& x);

// Lattice-normalized volume in the affine span (unit simplex = 1, point = 1).
Int normalized_volume(const LatticePolytope& x);
// d-dimensional normalized volume: 0 when affine_dim(x) < d.
Int normalized_volume_in_dim(const LatticePolytope& x, int d);

// Saturation of the integer span together with the unimodular change of
// coordinates carrying it onto the leading coordinate sublattice.
SublatticeFrame hermite_extend(int ambient_dim, const Mat& vectors);
// Same, anchored at a point.
SublatticeFrame hermite_extend_at(int ambient_dim, const Mat& vectors, const Vec& anchor);

// Image in the quotient lattice Z^n / span(frame), in HNF-derived coordinates.
LatticePolytope project_along(const LatticePolytope& x, const SublatticeFrame& u);
Vec project_point(const Vec& p, const SublatticeFrame& u);
// Coordinates within the frame; throws when a vertex leaves the sublattice.
LatticePolytope restrict_to(const LatticePolytope& x, const SublatticeFrame& u);
Vec restrict_point(const Vec& p, const SublatticeFrame& u);
// Inverse of restrict_to on points: anchor + sum y_i basis_i.
Vec embed_point(const Vec& y, const SublatticeFrame& u);

// Some v with y + v ⊆ x, if one exists.
std::optional<Vec> contains_translate(const LatticePolytope& x, const LatticePolytope& y);

struct Facet {
    Vec normal;   // primitive outer normal
    Int offset;   // support value
    std::vector<Vec> verts;
};
// Facets of a full-dimensional polytope (affine_dim == ambient dim).
std::vector<Facet> facets(const LatticePolytope& x);

// Vertex pairs spanning the 1-faces, in lex order.
std::vector<std::pair<Vec, Vec>> edges(const LatticePolytope& x);

LatticePolytope standard_simplex(int n);

}  // namespace mvone

#endif
