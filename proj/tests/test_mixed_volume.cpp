#include "mvone/mixed_volume.hpp"

#include "mvone/generators.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace mvone;

namespace {

PolytopeTuple diag(int n) {
    return make_tuple(n, std::vector<LatticePolytope>(static_cast<std::size_t>(n), standard_simplex(n)));
}

}  // namespace

TEST_CASE("diagonal tuples") {
    for (int n = 1; n <= 4; ++n) {
        CHECK(mixed_volume(diag(n)) == 1);
        CHECK(mixed_volume_oracle(diag(n)) == 1);
    }
}

TEST_CASE("axis segments") {
    LatticePolytope s1 = polytope_from_vertices(2, {{0, 0}, {1, 0}});
    LatticePolytope s2 = polytope_from_vertices(2, {{0, 0}, {0, 1}});
    CHECK(mixed_volume(make_tuple(2, {s1, s2})) == 1);
    CHECK(mixed_volume(make_tuple(2, {s1, s1})) == 0);
    CHECK(mixed_volume_oracle(make_tuple(2, {s1, s2})) == 1);
}

TEST_CASE("six triangles have mixed volume 1") {
    CHECK(mixed_volume(fixtures::six_triangles()) == 1);
}

TEST_CASE("a point entry yields zero") {
    LatticePolytope pt = polytope_from_vertices(2, {{3, 5}});
    CHECK(mixed_volume(make_tuple(2, {pt, standard_simplex(2)})) == 0);
    CHECK(mixed_volume_oracle(make_tuple(2, {pt, standard_simplex(2)})) == 0);
}

TEST_CASE("diagonal equals normalized volume") {
    Rng rng(7);
    for (int i = 0; i < 10; ++i) {
        LatticePolytope p = random_polytope(3, 5, 3, rng);
        if (affine_dim(p) < 3) continue;
        PolytopeTuple a = make_tuple(3, {p, p, p});
        CHECK(mixed_volume(a) == normalized_volume(p));
    }
}

TEST_CASE("symmetry under all permutations") {
    Rng rng(11);
    for (int i = 0; i < 5; ++i) {
        PolytopeTuple a = random_tuple(3, 4, 3, rng);
        Int ref = mixed_volume(a);
        std::vector<int> perm = {0, 1, 2};
        do {
            std::vector<LatticePolytope> es;
            for (int p : perm) es.push_back(a.entries[static_cast<std::size_t>(p)]);
            CHECK(mixed_volume(make_tuple(3, es)) == ref);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("translation invariance") {
    Rng rng(13);
    std::uniform_int_distribution<int> sh(-5, 5);
    for (int i = 0; i < 10; ++i) {
        PolytopeTuple a = random_tuple(3, 4, 3, rng);
        Int ref = mixed_volume(a);
        std::vector<LatticePolytope> moved;
        for (const auto& e : a.entries) {
            Vec t = {sh(rng), sh(rng), sh(rng)};
            moved.push_back(translate(e, t));
        }
        CHECK(mixed_volume(make_tuple(3, moved)) == ref);
    }
}

TEST_CASE("multilinearity in the first slot") {
    Rng rng(17);
    for (int i = 0; i < 8; ++i) {
        LatticePolytope x = random_polytope(2, 4, 3, rng);
        LatticePolytope y = random_polytope(2, 4, 3, rng);
        LatticePolytope c = random_polytope(2, 4, 3, rng);
        Int lhs = mixed_volume(make_tuple(2, {minkowski_sum(x, y), c}));
        Int rhs = mixed_volume(make_tuple(2, {x, c})) + mixed_volume(make_tuple(2, {y, c}));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("monotonicity") {
    Rng rng(19);
    for (int i = 0; i < 8; ++i) {
        PolytopeTuple small = random_tuple(3, 4, 2, rng);
        std::vector<LatticePolytope> big;
        for (const auto& e : small.entries) {
            std::vector<Vec> pts = e.verts;
            LatticePolytope extra = random_polytope(3, 2, 2, rng);
            pts.insert(pts.end(), extra.verts.begin(), extra.verts.end());
            big.push_back(convex_hull(3, pts));
        }
        CHECK(mixed_volume(small) <= mixed_volume(make_tuple(3, big)));
    }
}

TEST_CASE("unimodular invariance") {
    Rng rng(23);
    for (int i = 0; i < 8; ++i) {
        PolytopeTuple a = random_tuple(3, 4, 3, rng);
        UnimodularAffineMap m = random_unimodular_map(3, rng);
        std::vector<LatticePolytope> im;
        for (const auto& e : a.entries) im.push_back(apply_map(m, e));
        CHECK(mixed_volume(make_tuple(3, im)) == mixed_volume(a));
    }
}

TEST_CASE("serial and parallel entry points agree") {
    Rng rng(29);
    for (int i = 0; i < 10; ++i) {
        PolytopeTuple a = random_tuple(3, 5, 3, rng);
        CHECK(mixed_volume(a) == mixed_volume_serial(a));
    }
}

TEST_CASE("facet normals") {
    auto ns = facet_normals(convex_hull(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    std::vector<Vec> got;
    for (const auto& n : ns) got.push_back(n.coeffs);
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<Vec>{{-1, 0}, {0, -1}, {0, 1}, {1, 0}});
    CHECK_THROWS(facet_normals(polytope_from_vertices(2, {{0, 0}, {1, 0}})));
}

TEST_CASE("product under projection") {
    LatticePolytope seg = polytope_from_vertices(2, {{0, 0}, {1, 0}});
    SublatticeFrame u = hermite_extend(2, {{1, 0}});
    auto [total, inside, quotient] =
        mixed_volume_product_check(make_tuple(2, {seg, standard_simplex(2)}), u, 1);
    CHECK(total == 1);
    CHECK(inside == 1);
    CHECK(quotient == 1);
    CHECK(total == inside * quotient);

    // random tuple with the first entry inside span(e1)
    Rng rng(31);
    for (int i = 0; i < 5; ++i) {
        LatticePolytope in_u = polytope_from_vertices(3, {{0, 0, 0}, {2, 0, 0}});
        PolytopeTuple rest = random_tuple(3, 4, 3, rng);
        PolytopeTuple a = make_tuple(3, {in_u, rest.entries[0], rest.entries[1]});
        auto [t3, i3, q3] = mixed_volume_product_check(a, hermite_extend(3, {{1, 0, 0}}), 1);
        CHECK(t3 == i3 * q3);
        CHECK(t3 == mixed_volume(a));
    }
}
