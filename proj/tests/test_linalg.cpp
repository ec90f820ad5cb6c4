#include "mvone/linalg.hpp"

#include <doctest.h>

using namespace mvone;

TEST_CASE("determinant by fraction-free elimination") {
    CHECK(det_int({{1}}) == 1);
    CHECK(det_int({{2, 0}, {0, 3}}) == 6);
    CHECK(det_int({{1, 2}, {3, 4}}) == -2);
    CHECK(det_int({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
    CHECK(det_int({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}) == 1);
}

TEST_CASE("rank") {
    CHECK(rank_of({}) == 0);
    CHECK(rank_of({{0, 0}}) == 0);
    CHECK(rank_of({{1, 2}, {2, 4}}) == 1);
    CHECK(rank_of({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}) == 2);
}

TEST_CASE("row echelon transform is unimodular and reproduces the input") {
    Mat a = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
    HnfResult h = row_echelon_transform(a);
    CHECK(mat_mul(h.transform, a) == h.echelon);
    Int d = det_int(h.transform);
    CHECK((d == 1 || d == -1));
    CHECK(h.rank == rank_of(a));
    // staircase with positive pivots
    int last_col = -1;
    for (int r = 0; r < h.rank; ++r) {
        int c = 0;
        while (h.echelon[r][static_cast<std::size_t>(c)] == 0) ++c;
        CHECK(c > last_col);
        CHECK(h.echelon[r][static_cast<std::size_t>(c)] > 0);
        last_col = c;
    }
}

TEST_CASE("unimodular inverse") {
    Mat m = {{1, 2}, {0, 1}};
    Mat inv = unimodular_inverse(m);
    CHECK(mat_mul(m, inv) == identity(2));
}

TEST_CASE("primitive nullvector of a hyperplane") {
    Vec nu = primitive_nullvector({{1, 1, 0}, {0, 0, 1}});
    CHECK(dot(nu, {1, 1, 0}) == 0);
    CHECK(dot(nu, {0, 0, 1}) == 0);
    CHECK(gcd_vec(nu) == 1);
}

TEST_CASE("rational feasibility") {
    using Row = std::vector<Rat>;
    // feasibility of { x >= 0 : A x = b }
    CHECK(lp_feasible({Row{1, 1}}, {Rat(1)}));
    CHECK(lp_feasible({Row{1, -1}}, {Rat(-2)}));
    CHECK_FALSE(lp_feasible({Row{1}}, {Rat(-1)}));
    CHECK_FALSE(lp_feasible({Row{1, 1}, Row{1, 1}}, {Rat(1), Rat(2)}));
}

TEST_CASE("exact linear solve") {
    auto sol = solve_linear({{Rat(2), Rat(0)}, {Rat(1), Rat(3)}}, {Rat(1), Rat(2)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Rat(1, 2));
    CHECK((*sol)[1] == Rat(1, 2));
    CHECK_FALSE(solve_linear({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}, {Rat(0), Rat(1)}).has_value());
}
