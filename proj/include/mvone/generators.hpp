#pragma once

#include "mvone/mixed_volume.hpp"
#include "mvone/solver.hpp"

#include <cstdint>
#include <random>

namespace mvone {

using Rng = std::mt19937_64;

// Random unimodular matrix built from elementary row operations.
Mat random_unimodular(int n, Rng& rng);
UnimodularAffineMap random_unimodular_map(int n, Rng& rng);

// Random lattice polytope: hull of `points` draws from [0, coord_bound]^n.
LatticePolytope random_polytope(int n, int points, int coord_bound, Rng& rng);
PolytopeTuple random_tuple(int n, int points, int coord_bound, Rng& rng);

// Essential n-tuple of mixed volume 1: essential face subtuple of a random
// unimodular image of the standard simplex, randomly translated.
PolytopeTuple random_essential_mv1_tuple(int n, Rng& rng);

// Same construction with one entry dilated by 2: essential, mixed volume 2.
PolytopeTuple random_essential_mv2_tuple(int n, Rng& rng);

// Square Laurent system whose Newton polytopes form an MV-1 tuple, with
// random nonzero rational coefficients.
LaurentSystem random_mv1_system(int n, Rng& rng);

TorusPoint random_torus_point(int n, Rng& rng);

}  // namespace mvone
