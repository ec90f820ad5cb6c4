#include "mvone/certifier.hpp"

#include "mvone/errors.hpp"
#include "mvone/essentiality.hpp"
#include "mvone/generators.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace mvone;

TEST_CASE("n copies of the standard simplex") {
    for (int n = 1; n <= 4; ++n) {
        PolytopeTuple a = make_tuple(
            n, std::vector<LatticePolytope>(static_cast<std::size_t>(n), standard_simplex(n)));
        UnitCertificate c = certify_unit(a);
        CHECK(verify_certificate(a, c));
        CHECK(c.simplex.verts == standard_simplex(n).verts);
        for (const auto& v : c.translations) CHECK(is_zero(v));
    }
}

TEST_CASE("golden trace for the shifted-triangle tuple") {
    Vec a = {1, 2, 3};
    PolytopeTuple t = fixtures::shifted_triangles(a);
    UnitCertificate c = certify_unit(t);
    REQUIRE(verify_certificate(t, c));
    // translations are (w, w, -a + w) for one common w, and the simplex is a
    // translate of the standard simplex
    CHECK(c.translations[0] == c.translations[1]);
    CHECK(sub(c.translations[2], c.translations[0]) == negate(a));
    CHECK(c.simplex.verts == translate(standard_simplex(3), c.translations[0]).verts);
}

TEST_CASE("six triangles certify into a volume-1 simplex") {
    PolytopeTuple t = fixtures::six_triangles();
    UnitCertificate c = certify_unit(t);
    CHECK(verify_certificate(t, c));
    CHECK(normalized_volume(c.simplex) == 1);
}

TEST_CASE("mixed-volume-2 input is rejected") {
    std::vector<LatticePolytope> es(3, standard_simplex(3));
    es[1] = dilate(standard_simplex(3), 2);
    PolytopeTuple a = make_tuple(3, es);
    CHECK(is_essential(a));
    CHECK(mixed_volume(a) == 2);
    CHECK_THROWS_AS(certify_unit(a), NotMixedVolumeOne);
}

TEST_CASE("non-essential input is rejected up front") {
    LatticePolytope seg = polytope_from_vertices(2, {{0, 0}, {1, 0}});
    CHECK_THROWS_AS(certify_unit(make_tuple(2, {seg, standard_simplex(2)})), NotEssential);
}

TEST_CASE("lift_translations base example") {
    // two subsegments of [0,1] lifted to Z^1 + Z^1
    PolytopeTuple lifted = make_tuple(2, {polytope_from_vertices(2, {{0, 0}, {1, 0}}),
                                          polytope_from_vertices(2, {{1, 0}, {1, 1}})});
    UnitCertificate base;
    base.translations = {zero_vec(1), zero_vec(1)};
    base.simplex = polytope_from_vertices(1, {{Int(0)}, {Int(1)}});
    LiftResult r = lift_translations(lifted, base);
    CHECK(r.heights == std::vector<Int>{0, 0});
    CHECK(r.simplex.verts == std::vector<Vec>{{0, 0}, {1, 0}, {1, 1}});
}

TEST_CASE("lift_translations identity case") {
    PolytopeTuple lifted = make_tuple(3, {polytope_from_vertices(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}),
                                          polytope_from_vertices(3, {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}})});
    UnitCertificate base;
    base.translations = {zero_vec(2), zero_vec(2)};
    base.simplex = standard_simplex(2);
    LiftResult r = lift_translations(lifted, base);
    CHECK(r.heights == std::vector<Int>{0, 0});
    CHECK(normalized_volume(r.simplex) == 1);
}

TEST_CASE("decomposition of the monomial-change example") {
    // Newton polytopes of a + b x y and f(xy) + y g(xy)
    LatticePolytope n1 = polytope_from_vertices(2, {{0, 0}, {1, 1}});
    LatticePolytope n2 = convex_hull(2, {{0, 0}, {1, 1}, {0, 1}, {1, 2}});
    Theorem1Decomposition d = decompose_theorem1(make_tuple(2, {n1, n2}));
    REQUIRE(d.steps.size() == 2);
    CHECK(d.steps[0].indices == std::vector<int>{0});
    CHECK(d.steps[0].frame.basis == Mat{{1, 1}});
    CHECK(d.steps[1].indices == std::vector<int>{1});
    // the projected remainder is a primitive segment
    CHECK(normalized_volume(d.steps[0].quotient_tuple.entries[0]) == 1);
}

TEST_CASE("decomposition of an essential tuple is a single step") {
    PolytopeTuple t = fixtures::shifted_triangles({0, 1, -1});
    Theorem1Decomposition d = decompose_theorem1(t);
    REQUIRE(d.steps.size() == 1);
    CHECK(d.steps[0].indices == std::vector<int>{0, 1, 2});
}

TEST_CASE("decomposition detects zero mixed volume") {
    LatticePolytope seg = polytope_from_vertices(2, {{0, 0}, {1, 0}});
    CHECK_THROWS_AS(decompose_theorem1(make_tuple(2, {seg, seg})), ZeroMixedVolume);
}

TEST_CASE("decomposition step product is 1") {
    Rng rng(101);
    for (int i = 0; i < 10; ++i) {
        PolytopeTuple a = random_essential_mv1_tuple(3, rng);
        Theorem1Decomposition d = decompose_theorem1(a);
        std::size_t covered = 0;
        for (const auto& s : d.steps) covered += s.indices.size();
        CHECK(covered == 3);
    }
}

TEST_CASE("verify_certificate rejects wrong data") {
    PolytopeTuple a = make_tuple(2, {standard_simplex(2), standard_simplex(2)});
    UnitCertificate c = certify_unit(a);
    UnitCertificate shifted = c;
    for (auto& v : shifted.translations) v = add(v, Vec{1, 1});
    shifted.simplex = translate(shifted.simplex, {1, 1});
    CHECK(verify_certificate(a, shifted));
    UnitCertificate broken = c;
    broken.translations[0] = {5, 5};
    CHECK_FALSE(verify_certificate(a, broken));
    UnitCertificate fat = c;
    fat.simplex = dilate(standard_simplex(2), 2);
    CHECK_FALSE(verify_certificate(a, fat));
}

TEST_CASE("uniqueness check") {
    PolytopeTuple a = make_tuple(2, {standard_simplex(2), standard_simplex(2)});
    UnitCertificate c1 = certify_unit(a);
    UnitCertificate c2 = c1;
    CHECK(uniqueness_check(a, c1, c2));
    for (auto& v : c2.translations) v = add(v, Vec{1, 1});
    c2.simplex = translate(c2.simplex, {1, 1});
    CHECK(uniqueness_check(a, c1, c2));
    // non-uniform shifts of a non-essential axis-segment pair are flagged
    LatticePolytope s1 = polytope_from_vertices(2, {{0, 0}, {1, 0}});
    LatticePolytope s2 = polytope_from_vertices(2, {{0, 0}, {0, 1}});
    PolytopeTuple segs = make_tuple(2, {s1, s2});
    UnitCertificate d1;
    d1.translations = {zero_vec(2), zero_vec(2)};
    d1.simplex = standard_simplex(2);
    UnitCertificate d2;
    d2.translations = {zero_vec(2), Vec{1, 0}};
    d2.simplex = polytope_from_vertices(2, {{0, 0}, {1, 0}, {1, 1}});
    CHECK(verify_certificate(segs, d2));
    CHECK_FALSE(uniqueness_check(segs, d1, d2));
}

TEST_CASE("edges of certified entries are primitive") {
    Rng rng(103);
    for (int i = 0; i < 6; ++i) {
        PolytopeTuple a = random_essential_mv1_tuple(3, rng);
        certify_unit(a);
        for (const auto& e : a.entries)
            for (const auto& [v, w] : edges(e)) CHECK(gcd_vec(sub(w, v)) == 1);
    }
}

TEST_CASE("unit simplex count in the plane") {
    CHECK(count_unit_simplices_containing_axes(2) == 4);
    CHECK_THROWS(count_unit_simplices_containing_axes(1));
    CHECK_THROWS(count_unit_simplices_containing_axes(5));
}
