#include "mvone/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace mvone {

Covector::Covector(Vec c) : coeffs(std::move(c)) {
    Int g = gcd_vec(coeffs);
    if (g == 0) throw std::invalid_argument("covector must be nonzero");
    if (g != 1) throw std::invalid_argument("covector must be primitive");
}

UnimodularAffineMap UnimodularAffineMap::identity_map(int n) {
    return {identity(n), zero_vec(n)};
}

Vec UnimodularAffineMap::apply(const Vec& v) const {
    return add(mat_apply(linear, v), shift);
}

UnimodularAffineMap UnimodularAffineMap::compose(const UnimodularAffineMap& inner) const {
    return {mat_mul(linear, inner.linear), add(mat_apply(linear, inner.shift), shift)};
}

UnimodularAffineMap UnimodularAffineMap::inverse() const {
    Mat inv = unimodular_inverse(linear);
    return {inv, negate(mat_apply(inv, shift))};
}

LatticePolytope polytope_from_vertices(int dim, std::vector<Vec> verts) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.empty()) throw std::invalid_argument("polytope needs at least one point");
    for (const auto& v : verts)
        if (static_cast<int>(v.size()) != dim) throw std::invalid_argument("mixed dimensions");
    return LatticePolytope{dim, std::move(verts)};
}

bool in_convex_hull(const Vec& p, const std::vector<Vec>& pts) {
    if (pts.empty()) return false;
    const std::size_t n = p.size();
    std::vector<std::vector<Rat>> a(n + 1, std::vector<Rat>(pts.size()));
    std::vector<Rat> b(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) a[i][j] = Rat(pts[j][i]);
        b[i] = Rat(p[i]);
    }
    for (std::size_t j = 0; j < pts.size(); ++j) a[n][j] = 1;
    b[n] = 1;
    return lp_feasible(a, b);
}

namespace {

// Probe directions used to certify vertices cheaply before falling back to LP.
std::vector<Vec> probe_directions(int n) {
    std::vector<Vec> dirs;
    if (n <= 5) {
        Vec d(static_cast<std::size_t>(n), Int(-1));
        while (true) {
            if (!is_zero(d)) dirs.push_back(d);
            int i = 0;
            while (i < n && d[static_cast<std::size_t>(i)] == 1) d[static_cast<std::size_t>(i++)] = -1;
            if (i == n) break;
            ++d[static_cast<std::size_t>(i)];
        }
    } else {
        for (int i = 0; i < n; ++i) {
            dirs.push_back(unit_vec(n, i));
            dirs.push_back(negate(unit_vec(n, i)));
        }
    }
    return dirs;
}

}  // namespace

LatticePolytope convex_hull(int dim, std::vector<Vec> points) {
    if (points.empty()) throw std::invalid_argument("empty point set");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim) throw std::invalid_argument("mixed dimensions");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() <= 2) return LatticePolytope{dim, std::move(points)};

    std::vector<bool> confirmed(points.size(), false);
    for (const auto& d : probe_directions(dim)) {
        std::size_t best = 0;
        bool unique = true;
        Int bv = dot(d, points[0]);
        for (std::size_t i = 1; i < points.size(); ++i) {
            Int v = dot(d, points[i]);
            if (v > bv) { bv = v; best = i; unique = true; }
            else if (v == bv) unique = false;
        }
        if (unique) confirmed[best] = true;
    }

    std::vector<Vec> base;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (confirmed[i]) base.push_back(points[i]);

    std::vector<Vec> verts = base;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (confirmed[i]) continue;
        if (!base.empty() && in_convex_hull(points[i], base)) continue;
        std::vector<Vec> others;
        others.reserve(points.size() - 1);
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != i) others.push_back(points[j]);
        if (!in_convex_hull(points[i], others)) verts.push_back(points[i]);
    }
    std::sort(verts.begin(), verts.end());
    return LatticePolytope{dim, std::move(verts)};
}

Int support(const LatticePolytope& x, const Vec& alpha) {
    if (alpha.size() != static_cast<std::size_t>(x.dim))
        throw std::invalid_argument("covector/polytope dimension mismatch");
    Int best = dot(alpha, x.verts[0]);
    for (std::size_t i = 1; i < x.verts.size(); ++i) best = std::max(best, dot(alpha, x.verts[i]));
    return best;
}

LatticePolytope face(const LatticePolytope& x, const Vec& alpha) {
    Int m = support(x, alpha);
    std::vector<Vec> fv;
    for (const auto& v : x.verts)
        if (dot(alpha, v) == m) fv.push_back(v);
    return LatticePolytope{x.dim, std::move(fv)};
}

LatticePolytope minkowski_sum(const LatticePolytope& x, const LatticePolytope& y) {
    if (x.dim != y.dim) throw std::invalid_argument("minkowski_sum: dimension mismatch");
    std::vector<Vec> sums;
    sums.reserve(x.verts.size() * y.verts.size());
    for (const auto& a : x.verts)
        for (const auto& b : y.verts) sums.push_back(add(a, b));
    return convex_hull(x.dim, std::move(sums));
}

LatticePolytope translate(const LatticePolytope& x, const Vec& v) {
    std::vector<Vec> verts;
    verts.reserve(x.verts.size());
    for (const auto& w : x.verts) verts.push_back(add(w, v));
    return LatticePolytope{x.dim, std::move(verts)};  // order preserved under translation
}

LatticePolytope dilate(const LatticePolytope& x, const Int& c) {
    std::vector<Vec> verts;
    verts.reserve(x.verts.size());
    for (const auto& w : x.verts) verts.push_back(scale(c, w));
    return LatticePolytope{x.dim, std::move(verts)};
}

LatticePolytope apply_map(const UnimodularAffineMap& m, const LatticePolytope& x) {
    std::vector<Vec> verts;
    verts.reserve(x.verts.size());
    for (const auto& w : x.verts) verts.push_back(m.apply(w));
    return polytope_from_vertices(x.dim, std::move(verts));
}

int affine_dim(const LatticePolytope& x) {
    Mat diffs;
    for (std::size_t i = 1; i < x.verts.size(); ++i) diffs.push_back(sub(x.verts[i], x.verts[0]));
    return rank_of(std::move(diffs));
}

SublatticeFrame hermite_extend(int ambient_dim, const Mat& vectors) {
    return hermite_extend_at(ambient_dim, vectors, zero_vec(ambient_dim));
}

SublatticeFrame hermite_extend_at(int ambient_dim, const Mat& vectors, const Vec& anchor) {
    // columns = input vectors; unimodular row ops confine the span to the
    // leading coordinates
    Mat a(static_cast<std::size_t>(ambient_dim), Vec(vectors.size(), Int(0)));
    for (std::size_t j = 0; j < vectors.size(); ++j)
        for (int i = 0; i < ambient_dim; ++i)
            a[static_cast<std::size_t>(i)][j] = vectors[j][static_cast<std::size_t>(i)];
    HnfResult h = row_echelon_transform(a);
    Mat uinv = unimodular_inverse(h.transform);
    Mat basis;
    for (int i = 0; i < h.rank; ++i) {
        Vec b(static_cast<std::size_t>(ambient_dim));
        for (int r = 0; r < ambient_dim; ++r)
            b[static_cast<std::size_t>(r)] = uinv[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
        basis.push_back(std::move(b));
    }
    SublatticeFrame f;
    f.ambient_dim = ambient_dim;
    f.basis = std::move(basis);
    f.anchor = anchor;
    f.to_std = UnimodularAffineMap{h.transform, negate(mat_apply(h.transform, anchor))};
    return f;
}

Vec project_point(const Vec& p, const SublatticeFrame& u) {
    Vec w = mat_apply(u.to_std.linear, p);
    return Vec(w.begin() + u.rank(), w.end());
}

LatticePolytope project_along(const LatticePolytope& x, const SublatticeFrame& u) {
    if (u.ambient_dim != x.dim) throw std::invalid_argument("project_along: dimension mismatch");
    std::vector<Vec> pts;
    pts.reserve(x.verts.size());
    for (const auto& v : x.verts) pts.push_back(project_point(v, u));
    return convex_hull(x.dim - u.rank(), std::move(pts));
}

Vec restrict_point(const Vec& p, const SublatticeFrame& u) {
    Vec w = u.to_std.apply(p);
    for (int i = u.rank(); i < u.ambient_dim; ++i)
        if (w[static_cast<std::size_t>(i)] != 0)
            throw std::invalid_argument("point outside the affine sublattice");
    return Vec(w.begin(), w.begin() + u.rank());
}

Vec embed_point(const Vec& y, const SublatticeFrame& u) {
    Vec p = u.anchor;
    for (std::size_t i = 0; i < y.size(); ++i) p = add(p, scale(y[i], u.basis[i]));
    return p;
}

LatticePolytope restrict_to(const LatticePolytope& x, const SublatticeFrame& u) {
    std::vector<Vec> pts;
    pts.reserve(x.verts.size());
    for (const auto& v : x.verts) pts.push_back(restrict_point(v, u));
    return polytope_from_vertices(u.rank(), std::move(pts));
}

std::vector<Facet> facets(const LatticePolytope& x) {
    const int d = x.dim;
    if (affine_dim(x) != d) throw std::invalid_argument("facets: polytope not full-dimensional");
    std::vector<Facet> out;
    if (d == 1) {
        Int lo = x.verts.front()[0], hi = x.verts.back()[0];
        out.push_back(Facet{Vec{Int(1)}, hi, {Vec{hi}}});
        out.push_back(Facet{Vec{Int(-1)}, -lo, {Vec{lo}}});
        return out;
    }
    const std::size_t m = x.verts.size();
    std::set<Vec> seen;
    std::vector<std::size_t> idx(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i) idx[i] = i;
    while (true) {
        Mat diffs;
        for (std::size_t i = 1; i < static_cast<std::size_t>(d); ++i)
            diffs.push_back(sub(x.verts[idx[i]], x.verts[idx[0]]));
        Vec nu;
        bool spanning = true;
        try {
            nu = primitive_nullvector(diffs);
        } catch (const std::invalid_argument&) {
            spanning = false;
        }
        if (spanning) {
            Int off = dot(nu, x.verts[idx[0]]);
            bool above = false, below = false;
            for (const auto& v : x.verts) {
                Int s = dot(nu, v);
                if (s > off) above = true;
                if (s < off) below = true;
                if (above && below) break;
            }
            if (!(above && below)) {
                if (above) { nu = negate(nu); off = -off; }
                if (seen.insert(nu).second) {
                    Facet f;
                    f.normal = nu;
                    f.offset = off;
                    for (const auto& v : x.verts)
                        if (dot(f.normal, v) == off) f.verts.push_back(v);
                    out.push_back(std::move(f));
                }
            }
        }
        // next d-combination
        int i = d - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - static_cast<std::size_t>(d - i)) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < d; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

namespace {

Int volume_full_dim(const LatticePolytope& x) {
    const int d = x.dim;
    if (d == 0) return 1;
    if (d == 1) return x.verts.back()[0] - x.verts.front()[0];
    const Vec& apex = x.verts.front();  // lex-min vertex; placing decomposition
    Int vol = 0;
    for (const auto& f : facets(x)) {
        Int h = f.offset - dot(f.normal, apex);
        if (h == 0) continue;
        vol += h * normalized_volume(LatticePolytope{d, f.verts});
    }
    return vol;
}

}  // namespace

Int normalized_volume(const LatticePolytope& x) {
    const int d = affine_dim(x);
    if (d == 0) return 1;
    if (d == x.dim) return volume_full_dim(x);
    Mat diffs;
    for (std::size_t i = 1; i < x.verts.size(); ++i) diffs.push_back(sub(x.verts[i], x.verts[0]));
    SublatticeFrame f = hermite_extend_at(x.dim, diffs, x.verts[0]);
    return volume_full_dim(restrict_to(x, f));
}

Int normalized_volume_in_dim(const LatticePolytope& x, int d) {
    if (affine_dim(x) < d) return 0;
    return normalized_volume(x);
}

std::optional<Vec> contains_translate(const LatticePolytope& x, const LatticePolytope& y) {
    if (x.dim != y.dim) throw std::invalid_argument("contains_translate: dimension mismatch");
    const int n = x.dim;
    std::vector<Facet> fx;
    const bool full = affine_dim(x) == n && n > 0;
    if (full) fx = facets(x);
    Vec lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        Int xmin = x.verts[0][static_cast<std::size_t>(j)], xmax = xmin;
        Int ymin = y.verts[0][static_cast<std::size_t>(j)], ymax = ymin;
        for (const auto& v : x.verts) {
            xmin = std::min(xmin, v[static_cast<std::size_t>(j)]);
            xmax = std::max(xmax, v[static_cast<std::size_t>(j)]);
        }
        for (const auto& v : y.verts) {
            ymin = std::min(ymin, v[static_cast<std::size_t>(j)]);
            ymax = std::max(ymax, v[static_cast<std::size_t>(j)]);
        }
        lo[static_cast<std::size_t>(j)] = xmin - ymin;
        hi[static_cast<std::size_t>(j)] = xmax - ymax;
        if (lo[static_cast<std::size_t>(j)] > hi[static_cast<std::size_t>(j)]) return std::nullopt;
    }
    Vec v = lo;
    while (true) {
        bool ok = true;
        if (full) {
            for (const auto& f : fx) {
                if (support(y, f.normal) + dot(f.normal, v) > f.offset) { ok = false; break; }
            }
        } else {
            for (const auto& w : y.verts)
                if (!in_convex_hull(add(w, v), x.verts)) { ok = false; break; }
        }
        if (ok) return v;
        int j = 0;
        while (j < n) {
            if (v[static_cast<std::size_t>(j)] < hi[static_cast<std::size_t>(j)]) {
                ++v[static_cast<std::size_t>(j)];
                break;
            }
            v[static_cast<std::size_t>(j)] = lo[static_cast<std::size_t>(j)];
            ++j;
        }
        if (j == n) return std::nullopt;
        if (n == 0) return zero_vec(0);  // ambient Z^0: containment is trivial
    }
}

std::vector<std::pair<Vec, Vec>> edges(const LatticePolytope& x) {
    std::vector<std::pair<Vec, Vec>> out;
    const std::size_t m = x.verts.size();
    if (m == 2) {
        out.emplace_back(x.verts[0], x.verts[1]);
        return out;
    }
    const int n = x.dim;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const Vec& v = x.verts[i];
            const Vec& w = x.verts[j];
            // feasibility: alpha(v-w)=0, alpha(v-u) >= 1 for the other vertices
            std::vector<std::vector<Rat>> a;
            std::vector<Rat> b;
            std::vector<Vec> others;
            for (std::size_t k = 0; k < m; ++k)
                if (k != i && k != j) others.push_back(x.verts[k]);
            const std::size_t rows = others.size() + 1;
            const std::size_t cols = 2 * static_cast<std::size_t>(n) + others.size();
            a.assign(rows, std::vector<Rat>(cols, Rat(0)));
            b.assign(rows, Rat(0));
            for (std::size_t r = 0; r < others.size(); ++r) {
                Vec d = sub(v, others[r]);
                for (int c = 0; c < n; ++c) {
                    a[r][static_cast<std::size_t>(c)] = Rat(d[static_cast<std::size_t>(c)]);
                    a[r][static_cast<std::size_t>(n + c)] = Rat(-d[static_cast<std::size_t>(c)]);
                }
                a[r][2 * static_cast<std::size_t>(n) + r] = -1;
                b[r] = 1;
            }
            Vec dw = sub(v, w);
            for (int c = 0; c < n; ++c) {
                a[rows - 1][static_cast<std::size_t>(c)] = Rat(dw[static_cast<std::size_t>(c)]);
                a[rows - 1][static_cast<std::size_t>(n + c)] = Rat(-dw[static_cast<std::size_t>(c)]);
            }
            b[rows - 1] = 0;
            if (lp_feasible(a, b)) out.emplace_back(v, w);
        }
    }
    return out;
}

LatticePolytope standard_simplex(int n) {
    std::vector<Vec> verts{zero_vec(n)};
    for (int i = 0; i < n; ++i) verts.push_back(unit_vec(n, i));
    return polytope_from_vertices(n, std::move(verts));
}

}  // namespace mvone
