#pragma once

#include "mvone/mixed_volume.hpp"

#include <array>

namespace fixtures {

inline mvone::Vec simplex_vertex(int n, int v) {
    return v == 0 ? mvone::zero_vec(n) : mvone::unit_vec(n, v - 1);
}

// Six triangles on vertices 0..6 of the standard simplex in Z^6, pairwise
// sharing no edge up to translation.
inline mvone::PolytopeTuple six_triangles() {
    const std::array<std::array<int, 3>, 6> tri = {
        {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 6}, {1, 4, 5}, {2, 4, 6}}};
    std::vector<mvone::LatticePolytope> entries;
    for (const auto& t : tri) {
        std::vector<mvone::Vec> pts;
        for (int v : t) pts.push_back(simplex_vertex(6, v));
        entries.push_back(mvone::polytope_from_vertices(6, std::move(pts)));
    }
    return mvone::make_tuple(6, std::move(entries));
}

// The 3-tuple (0,e1,e2), (0,e2,e3), (a, a+e3, a+e1).
inline mvone::PolytopeTuple shifted_triangles(const mvone::Vec& a) {
    using namespace mvone;
    std::vector<LatticePolytope> entries;
    entries.push_back(polytope_from_vertices(3, {zero_vec(3), unit_vec(3, 0), unit_vec(3, 1)}));
    entries.push_back(polytope_from_vertices(3, {zero_vec(3), unit_vec(3, 1), unit_vec(3, 2)}));
    entries.push_back(polytope_from_vertices(
        3, {a, add(a, unit_vec(3, 2)), add(a, unit_vec(3, 0))}));
    return make_tuple(3, std::move(entries));
}

}  // namespace fixtures
