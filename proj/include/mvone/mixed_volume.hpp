#ifndef MVONE_MIXED_VOLUME_HPP
#define MVONE_MIXED_VOLUME_HPP

#include <tuple>
#include <vector>

#include "mvone/lattice.hpp"

namespace mvone {

// Ordered tuple of lattice polytopes in a common ambient lattice.
struct PolytopeTuple {
    int dim = 0;
    std::vector<LatticePolytope> entries;

    int size() const { return static_cast<int>(entries.size()); }
};

PolytopeTuple make_tuple(int dim, std::vector<LatticePolytope> entries);

// Lattice-normalized mixed volume of an n-tuple in Z^n, by the support
// function recursion over the facet normals of the sum of entries 2..n.
// The default entry point parallelizes the top level of the recursion.
Int mixed_volume(const PolytopeTuple& a);
Int mixed_volume_serial(const PolytopeTuple& a);

// Independent polarization oracle: (1/n!) sum over nonempty S of
// (-1)^(n-|S|) Vol_n(sum of the selected entries).
Int mixed_volume_oracle(const PolytopeTuple& a);

// Primitive outer facet normals of a full-dimensional polytope.
std::vector<Covector> facet_normals(const LatticePolytope& x);

// Product rule data: (mixed volume of a, mixed volume of the first k
// entries inside u, mixed volume of the projections of the rest). When the
// first k entries lie in translates of span(u), the first component equals
// the product of the other two.
std::tuple<Int, Int, Int> mixed_volume_product_check(const PolytopeTuple& a,
                                                     const SublatticeFrame& u, int k);

}  // namespace mvone

#endif
