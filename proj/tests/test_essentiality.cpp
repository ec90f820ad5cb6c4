#include "mvone/essentiality.hpp"

#include "mvone/errors.hpp"
#include "fixtures.hpp"

#include <doctest.h>

using namespace mvone;

namespace {

LatticePolytope seg(int n, int axis) {
    return polytope_from_vertices(n, {zero_vec(n), unit_vec(n, axis)});
}

}  // namespace

TEST_CASE("tuple_dim") {
    CHECK(tuple_dim(make_tuple(2, {standard_simplex(2), standard_simplex(2)})) == 0);
    CHECK(tuple_dim(make_tuple(2, {seg(2, 0), seg(2, 0)})) == -1);
    LatticePolytope tri3 = polytope_from_vertices(3, {zero_vec(3), unit_vec(3, 0), unit_vec(3, 1)});
    CHECK(tuple_dim(make_tuple(3, {tri3})) == 1);
}

TEST_CASE("essentiality") {
    CHECK_FALSE(is_essential(make_tuple(2, {seg(2, 0), standard_simplex(2)})));
    CHECK(is_essential(fixtures::six_triangles()));
    for (int n = 1; n <= 4; ++n)
        CHECK(is_essential(make_tuple(
            n, std::vector<LatticePolytope>(static_cast<std::size_t>(n), standard_simplex(n)))));
}

TEST_CASE("linear independence") {
    CHECK(is_linearly_independent(make_tuple(2, {seg(2, 0), seg(2, 1)})));
    CHECK_FALSE(is_linearly_independent(make_tuple(2, {seg(2, 0), seg(2, 0)})));
    CHECK(is_linearly_independent(fixtures::six_triangles()));
}

TEST_CASE("minimal deficient subtuple") {
    auto whole = minimal_deficient_subtuple(
        make_tuple(2, {standard_simplex(2), standard_simplex(2)}));
    REQUIRE(whole.has_value());
    CHECK(whole->indices == std::vector<int>{0, 1});
    CHECK(whole->sum_dim == 2);
    CHECK(whole->deficiency == 0);

    auto first = minimal_deficient_subtuple(make_tuple(2, {seg(2, 0), standard_simplex(2)}));
    REQUIRE(first.has_value());
    CHECK(first->indices == std::vector<int>{0});
    CHECK(first->sum_dim == 1);

    auto strict = minimal_deficient_subtuple(make_tuple(2, {seg(2, 0), seg(2, 0)}));
    REQUIRE(strict.has_value());
    CHECK(strict->indices == std::vector<int>{0, 1});
    CHECK(strict->deficiency == 1);

    LatticePolytope tri3 = polytope_from_vertices(3, {zero_vec(3), unit_vec(3, 0), unit_vec(3, 1)});
    CHECK_FALSE(minimal_deficient_subtuple(make_tuple(3, {tri3})).has_value());
}

TEST_CASE("maximal essential subtuple") {
    auto [all, frame_all] = maximal_essential_subtuple(fixtures::six_triangles());
    CHECK(all == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(frame_all.rank() == 6);

    LatticePolytope cube = convex_hull(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                           {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    // the first axis segment alone is the inclusion-minimal critical subtuple
    auto [first, frame_first] =
        maximal_essential_subtuple(make_tuple(3, {seg(3, 0), seg(3, 1), cube}));
    CHECK(first == std::vector<int>{0});
    CHECK(frame_first.rank() == 1);

    CHECK_THROWS_AS(maximal_essential_subtuple(make_tuple(3, {seg(3, 0), seg(3, 0), cube})),
                    ZeroMixedVolume);
    try {
        maximal_essential_subtuple(make_tuple(3, {seg(3, 0), seg(3, 0), cube}));
    } catch (const ZeroMixedVolume& z) {
        CHECK(z.witness == std::vector<int>{0, 1});
    }
}

TEST_CASE("essential implies linearly independent") {
    CHECK(is_linearly_independent(fixtures::six_triangles()));
    CHECK(is_linearly_independent(fixtures::shifted_triangles({1, 2, 3})));
    CHECK(is_essential(fixtures::shifted_triangles({1, 2, 3})));
}
