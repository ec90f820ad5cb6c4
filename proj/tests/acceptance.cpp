// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include "mvone/certifier.hpp"
#include "mvone/errors.hpp"
#include "mvone/essentiality.hpp"
#include "mvone/generators.hpp"
#include "mvone/mixed_volume.hpp"
#include "mvone/solver.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace mvone;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool ok, double seconds) {
    std::printf("criterion %d %-28s %s  (%.1f s)\n", number, name.c_str(),
                ok ? "PASS" : "FAIL", seconds);
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

void run(int number, const std::string& name, const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::printf("  unexpected exception: %s\n", e.what());
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(number, name, ok, dt);
}

std::vector<PolytopeTuple> shared_corpus() {
    std::vector<PolytopeTuple> out;
    Rng rng(20240826);
    for (int i = 0; i < 520; ++i) {
        int n = 2 + static_cast<int>(rng() % 3);
        out.push_back(random_tuple(n, 5, 3, rng));
    }
    return out;
}

bool criterion1(const std::vector<PolytopeTuple>& corpus, double* elapsed) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (const auto& a : corpus)
        if (mixed_volume(a) != mixed_volume_oracle(a)) {
            ok = false;
            break;
        }
    *elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return ok && *elapsed < 60.0;
}

bool criterion2(const std::vector<PolytopeTuple>& corpus) {
    for (const auto& a : corpus) {
        bool zero = mixed_volume(a) == 0;
        auto rep = minimal_deficient_subtuple(a);
        bool deficient = rep.has_value() && rep->deficiency > 0;
        if (zero != deficient) return false;
    }
    return true;
}

bool criterion3() {
    if (count_unit_simplices_containing_axes(2) != 4) return false;
    if (count_unit_simplices_containing_axes(3) != 32) return false;
    auto t0 = std::chrono::steady_clock::now();
    if (count_unit_simplices_containing_axes(4) != 400) return false;
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return dt < 600.0;
}

PolytopeTuple golden_tuple(const Vec& a) {
    Vec z = zero_vec(3), e1 = unit_vec(3, 0), e2 = unit_vec(3, 1), e3 = unit_vec(3, 2);
    LatticePolytope t1 = polytope_from_vertices(3, {z, e1, e2});
    LatticePolytope t2 = polytope_from_vertices(3, {z, e2, e3});
    LatticePolytope t3 = polytope_from_vertices(3, {a, add(a, e3), add(a, e1)});
    return make_tuple(3, {t1, t2, t3});
}

bool criterion4() {
    Vec a = {1, 2, 3};
    PolytopeTuple t = golden_tuple(a);
    UnitCertificate c = certify_unit(t);
    if (!verify_certificate(t, c)) return false;
    if (c.translations[0] != c.translations[1]) return false;
    if (sub(c.translations[2], c.translations[0]) != negate(a)) return false;
    // after subtracting the simultaneous translation the simplex is standard
    return c.simplex.verts == translate(standard_simplex(3), c.translations[0]).verts;
}

bool criterion5() {
    std::vector<std::vector<int>> tri = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6},
                                         {1, 3, 6}, {1, 4, 5}, {2, 4, 6}};
    std::vector<Vec> pts(7, zero_vec(6));
    for (int i = 1; i <= 6; ++i) pts[static_cast<std::size_t>(i)] = unit_vec(6, i - 1);
    std::vector<LatticePolytope> entries;
    for (const auto& t : tri)
        entries.push_back(polytope_from_vertices(
            6, {pts[static_cast<std::size_t>(t[0])], pts[static_cast<std::size_t>(t[1])],
                pts[static_cast<std::size_t>(t[2])]}));
    PolytopeTuple a = make_tuple(6, entries);
    if (!is_essential(a)) return false;
    if (mixed_volume(a) != 1) return false;
    UnitCertificate c = certify_unit(a);
    if (!verify_certificate(a, c)) return false;
    if (normalized_volume(c.simplex) != 1) return false;
    // no two triangles share an edge up to translation
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j)
            for (const auto& [p, q] : edges(entries[i]))
                for (const auto& [r, s] : edges(entries[j])) {
                    Vec d1 = sub(q, p), d2 = sub(s, r);
                    if (d1 == d2 || d1 == negate(d2)) return false;
                }
    return true;
}

bool criterion6() {
    Rng rng(600);
    for (int i = 0; i < 200; ++i) {
        int n = 2 + static_cast<int>(rng() % 4);
        PolytopeTuple a = random_essential_mv1_tuple(n, rng);
        UnitCertificate c0 = certify_unit(a, 0);
        UnitCertificate c1 = certify_unit(a, 1);
        if (!verify_certificate(a, c0) || !verify_certificate(a, c1)) return false;
        if (mixed_volume(a) != 1) return false;
        if (!uniqueness_check(a, c0, c1)) return false;
    }
    return true;
}

bool criterion7() {
    Rng rng(700);
    int solved = 0;
    int attempts = 0;
    while (solved < 200 && attempts < 800) {
        ++attempts;
        int n = 2 + static_cast<int>(rng() % 4);
        LaurentSystem s = random_mv1_system(n, rng);
        try {
            auto [pt, plan] = solve_unique(s);
            if (!verify_solution(s, pt)) return false;
            ++solved;
        } catch (const SingularBlock&) {
        } catch (const ZeroCoordinate&) {
        }
    }
    if (solved < 200) return false;

    // closed form for {a + bxy, f(xy) + y g(xy)} with linear f, g
    Rng crng(701);
    auto coef = [&crng]() {
        Int num = Int(1 + crng() % 50) * (crng() % 2 ? 1 : -1);
        return Rat(num, Int(1 + crng() % 20));
    };
    int checked = 0;
    while (checked < 20) {
        Rat a = coef(), b = coef(), f0 = coef(), f1 = coef(), g0 = coef(), g1 = coef();
        Rat u = -a / b;
        Rat fu = f0 + f1 * u, gu = g0 + g1 * u;
        if (fu == 0 || gu == 0) continue;
        Rat v = -fu / gu;
        LaurentSystem s;
        s.n_vars = 2;
        LaurentPolynomial p1, p2;
        p1.n_vars = p2.n_vars = 2;
        p1.terms[{0, 0}] = a;
        p1.terms[{1, 1}] = b;
        // f(xy) + y g(xy) = f0 + f1 xy + g0 y + g1 x y^2
        p2.terms[{0, 0}] = f0;
        p2.terms[{1, 1}] = f1;
        p2.terms[{0, 1}] = g0;
        p2.terms[{1, 2}] = g1;
        s.polys = {p1, p2};
        TorusPoint pt;
        try {
            pt = solve_unique(s).first;
        } catch (const SingularBlock&) {
            continue;
        } catch (const ZeroCoordinate&) {
            continue;
        }
        if (pt.coordinates.size() != 2) return false;
        if (pt.coordinates[1] != v) return false;
        if (pt.coordinates[0] != u / v) return false;
        if (!verify_solution(s, pt)) return false;
        ++checked;
    }
    return true;
}

bool criterion8() {
    Rng rng(800);
    for (int i = 0; i < 50; ++i) {
        int n = 2 + static_cast<int>(rng() % 3);
        PolytopeTuple a = random_essential_mv2_tuple(n, rng);
        if (mixed_volume(a) != 2) return false;
        try {
            UnitCertificate c = certify_unit(a);
            if (verify_certificate(a, c)) return false;  // false certificate
            return false;                                // should have thrown
        } catch (const NotMixedVolumeOne&) {
        }
    }
    return true;
}

}  // namespace

int main() {
    std::vector<PolytopeTuple> corpus = shared_corpus();

    {
        double elapsed = 0.0;
        bool ok = false;
        try {
            ok = criterion1(corpus, &elapsed);
        } catch (const std::exception& e) {
            std::printf("  unexpected exception: %s\n", e.what());
        }
        report(1, "oracle equivalence", ok, elapsed);
    }
    run(2, "zero criterion", [&corpus] { return criterion2(corpus); });
    run(3, "axis simplex counts", criterion3);
    run(4, "golden trace", criterion4);
    run(5, "six triangles", criterion5);
    run(6, "certify round trip", criterion6);
    run(7, "solver end-to-end", criterion7);
    run(8, "negative detection", criterion8);

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
