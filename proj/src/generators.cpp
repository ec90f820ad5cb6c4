#include "mvone/generators.hpp"

#include "mvone/essentiality.hpp"

#include <algorithm>
#include <numeric>

namespace mvone {

Mat random_unimodular(int n, Rng& rng) {
    Mat m = identity(n);
    std::uniform_int_distribution<int> row(0, n - 1), coef(-2, 2), op(0, 3);
    for (int step = 0; step < 3 * n + 2; ++step) {
        int i = row(rng), j = row(rng);
        switch (op(rng)) {
            case 0: {  // add multiple of row j to row i
                if (i == j) break;
                Int c = coef(rng);
                for (int t = 0; t < n; ++t)
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] +=
                        c * m[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
                break;
            }
            case 1:
                std::swap(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(j)]);
                break;
            default:
                for (auto& x : m[static_cast<std::size_t>(i)]) x = -x;
                break;
        }
    }
    return m;
}

UnimodularAffineMap random_unimodular_map(int n, Rng& rng) {
    std::uniform_int_distribution<int> sh(-4, 4);
    Vec shift(static_cast<std::size_t>(n));
    for (auto& x : shift) x = sh(rng);
    return UnimodularAffineMap{random_unimodular(n, rng), std::move(shift)};
}

LatticePolytope random_polytope(int n, int points, int coord_bound, Rng& rng) {
    std::uniform_int_distribution<int> c(0, coord_bound);
    std::vector<Vec> pts;
    for (int p = 0; p < points; ++p) {
        Vec v(static_cast<std::size_t>(n));
        for (auto& x : v) x = c(rng);
        pts.push_back(std::move(v));
    }
    return convex_hull(n, std::move(pts));
}

PolytopeTuple random_tuple(int n, int points, int coord_bound, Rng& rng) {
    std::vector<LatticePolytope> entries;
    for (int i = 0; i < n; ++i) entries.push_back(random_polytope(n, points, coord_bound, rng));
    return make_tuple(n, std::move(entries));
}

namespace {

// Essential tuple of vertex subsets of the standard simplex, found by
// seeded rejection; the full-simplex tuple is the always-valid fallback.
std::vector<std::vector<int>> essential_vertex_subsets(int n, Rng& rng) {
    std::vector<int> all(static_cast<std::size_t>(n) + 1);
    std::iota(all.begin(), all.end(), 0);
    std::uniform_int_distribution<int> size_dist(2, n + 1);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<std::vector<int>> subsets;
        std::vector<LatticePolytope> entries;
        for (int i = 0; i < n; ++i) {
            std::vector<int> pool = all;
            std::shuffle(pool.begin(), pool.end(), rng);
            // entries of an essential tuple span dimension >= 2, so draw
            // at least three vertices for n >= 2
            const int lo = n >= 2 ? 3 : 2;
            std::uniform_int_distribution<int> sz(lo, n + 1);
            pool.resize(static_cast<std::size_t>(sz(rng)));
            std::sort(pool.begin(), pool.end());
            std::vector<Vec> pts;
            for (int v : pool)
                pts.push_back(v == 0 ? zero_vec(n) : unit_vec(n, v - 1));
            entries.push_back(polytope_from_vertices(n, std::move(pts)));
            subsets.push_back(std::move(pool));
        }
        if (is_essential(make_tuple(n, std::move(entries)))) return subsets;
    }
    std::vector<std::vector<int>> full(static_cast<std::size_t>(n), all);
    return full;
}

PolytopeTuple mv1_tuple_impl(int n, Rng& rng, bool dilate_one) {
    auto subsets = essential_vertex_subsets(n, rng);
    UnimodularAffineMap m = random_unimodular_map(n, rng);
    std::uniform_int_distribution<int> sh(-4, 4);
    std::vector<LatticePolytope> entries;
    for (int i = 0; i < n; ++i) {
        std::vector<Vec> pts;
        for (int v : subsets[static_cast<std::size_t>(i)])
            pts.push_back(m.apply(v == 0 ? zero_vec(n) : unit_vec(n, v - 1)));
        LatticePolytope e = polytope_from_vertices(n, std::move(pts));
        if (dilate_one && i == 0) e = dilate(e, 2);
        Vec t(static_cast<std::size_t>(n));
        for (auto& x : t) x = sh(rng);
        entries.push_back(translate(e, t));
    }
    return make_tuple(n, std::move(entries));
}

}  // namespace

PolytopeTuple random_essential_mv1_tuple(int n, Rng& rng) { return mv1_tuple_impl(n, rng, false); }

PolytopeTuple random_essential_mv2_tuple(int n, Rng& rng) { return mv1_tuple_impl(n, rng, true); }

LaurentSystem random_mv1_system(int n, Rng& rng) {
    PolytopeTuple a = random_essential_mv1_tuple(n, rng);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    LaurentSystem s;
    s.n_vars = n;
    for (const auto& e : a.entries) {
        LaurentPolynomial p;
        p.n_vars = n;
        for (const auto& v : e.verts) {
            int nu = 0;
            while (nu == 0) nu = num(rng);
            p.terms[v] = Rat(nu) / Rat(den(rng));
        }
        s.polys.push_back(std::move(p));
    }
    return s;
}

TorusPoint random_torus_point(int n, Rng& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    TorusPoint p;
    for (int i = 0; i < n; ++i) {
        int nu = 0;
        while (nu == 0) nu = num(rng);
        p.coordinates.push_back(Rat(nu) / Rat(den(rng)));
    }
    return p;
}

}  // namespace mvone
