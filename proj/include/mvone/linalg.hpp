#ifndef MVONE_LINALG_HPP
#define MVONE_LINALG_HPP

#include <optional>
#include <utility>

#include "mvone/numbers.hpp"

namespace mvone {

// Rank of an integer matrix (rows as vectors), exact.
int rank_of(Mat rows);

// Determinant of a square integer matrix, Bareiss fraction-free elimination.
Int det_int(Mat m);

Mat identity(int n);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_apply(const Mat& m, const Vec& v);
Mat transpose(const Mat& m);

// Inverse of an integer matrix with det = +-1; throws on other determinants.
Mat unimodular_inverse(const Mat& m);

// Integer row echelon with a unimodular transform: returns (U, H, rank) with
// U * A = H, U unimodular, and the nonzero rows of H on top in staircase form.
struct HnfResult {
    Mat transform;  // U, n x n unimodular
    Mat echelon;    // H = U * A
    int rank = 0;
};
HnfResult row_echelon_transform(const Mat& a);

// Primitive integer vector in the kernel of a (d-1) x d matrix of rank d-1,
// computed from signed maximal minors.
Vec primitive_nullvector(const Mat& rows);

// Exact feasibility of { x >= 0 : A x = b } by phase-one simplex (Bland's rule).
bool lp_feasible(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b);

// Solve a square rational system; returns nullopt when the matrix is singular.
std::optional<std::vector<Rat>> solve_linear(const std::vector<std::vector<Rat>>& a,
                                             const std::vector<Rat>& b);

}  // namespace mvone

#endif
