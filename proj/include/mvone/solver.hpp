#pragma once

#include "mvone/certifier.hpp"
#include "mvone/mixed_volume.hpp"

#include <map>
#include <vector>

namespace mvone {

using ExactScalar = Rat;

// Sparse Laurent polynomial: exponent vector -> nonzero rational coefficient.
struct LaurentPolynomial {
    int n_vars = 0;
    std::map<Vec, Rat> terms;
};

struct LaurentSystem {
    int n_vars = 0;
    std::vector<LaurentPolynomial> polys;
};

// One linearization stage: after the monomial change of the working
// variables, the selected equations become affine-linear in the leading
// block of new variables once each is divided by its normalizing monomial.
struct SolveStage {
    UnimodularAffineMap monomial_change;   // exponents a -> linear * a, in the working space
    std::vector<int> equations;            // original equation indices in this block
    std::vector<int> solved_coordinates;   // cascade coordinates determined here
    std::vector<Vec> normalizing_monomials;  // per block equation, transformed exponents
};

struct SolvePlan {
    int n_vars = 0;
    std::vector<SolveStage> stages;
    // Composite exponent map x-exponents -> cascade exponents; the point in
    // the original variables is x_j = prod_i z_i^(composite[i][j]).
    Mat composite;
};

struct TorusPoint {
    std::vector<Rat> coordinates;  // all nonzero
};

LatticePolytope newton_polytope(const LaurentPolynomial& p);

// Decompose the Newton polytope tuple and turn each step's certificate into
// a monomial change. Throws ZeroMixedVolume / MixedVolumeExceedsOne when the
// mixed volume is not 1.
SolvePlan build_solve_plan(const LaurentSystem& s);

// Run the cascade on concrete coefficients. Throws SingularBlock or
// ZeroCoordinate when the coefficients are non-generic for the plan.
TorusPoint execute_plan(const SolvePlan& plan, const LaurentSystem& s);

std::pair<TorusPoint, SolvePlan> solve_unique(const LaurentSystem& s);

bool verify_solution(const LaurentSystem& s, const TorusPoint& p);

}  // namespace mvone
