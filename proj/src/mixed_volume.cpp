#include "mvone/mixed_volume.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mvone {

PolytopeTuple make_tuple(int dim, std::vector<LatticePolytope> entries) {
    for (const auto& e : entries)
        if (e.dim != dim) throw std::invalid_argument("tuple entries must share the ambient dimension");
    return PolytopeTuple{dim, std::move(entries)};
}

std::vector<Covector> facet_normals(const LatticePolytope& x) {
    std::vector<Covector> out;
    for (auto& f : facets(x)) out.push_back(Covector(f.normal));
    return out;
}

namespace {

// Dimension of the Minkowski sum of the faces of the given entries at alpha,
// computed from stacked vertex differences; no hulls are built.
int face_sum_dim(const std::vector<LatticePolytope>& ent, std::size_t from, const Vec& alpha) {
    Mat diffs;
    for (std::size_t j = from; j < ent.size(); ++j) {
        LatticePolytope f = face(ent[j], alpha);
        for (std::size_t i = 1; i < f.verts.size(); ++i) diffs.push_back(sub(f.verts[i], f.verts[0]));
    }
    return rank_of(diffs);
}

// Raw vertex differences and deduped primitive directions (up to sign) of
// the entries from position `from` on.
void collect_dirs(const std::vector<LatticePolytope>& ent, std::size_t from, Mat& diffs,
                  std::set<Vec>& dirset) {
    for (std::size_t j = from; j < ent.size(); ++j) {
        const auto& vs = ent[j].verts;
        for (std::size_t p = 0; p < vs.size(); ++p)
            for (std::size_t q = p + 1; q < vs.size(); ++q) {
                Vec d = sub(vs[q], vs[p]);
                diffs.push_back(d);
                Int g = gcd_vec(d);
                if (g == 0) continue;
                for (auto& x : d) x /= g;
                if (d < negate(d)) d = negate(d);
                dirset.insert(std::move(d));
            }
    }
}

// ---------------------------------------------------------------------------
// Machine-integer fast path for facet-normal enumeration. All quantities are
// minors of matrices with entries bounded by SMALL_LIMIT (or twice that for
// differences), so with dim <= 6 every intermediate product provably fits in
// __int128; inputs outside those bounds fall back to the bignum path.
// ---------------------------------------------------------------------------

using I64 = long long;
using I128 = __int128;
using V64 = std::vector<I64>;

constexpr I64 SMALL_LIMIT = 1024;
constexpr int SMALL_DIM = 6;

bool to_small(const Vec& v, V64& out) {
    out.clear();
    out.reserve(v.size());
    for (const auto& x : v) {
        if (x > SMALL_LIMIT || x < -SMALL_LIMIT) return false;
        out.push_back(static_cast<I64>(x));
    }
    return true;
}

// Rank by fraction-free (Bareiss) elimination; entries stay bounded by minors
// of the input, which fit in __int128 for the bounded inputs used here.
int rank128(std::vector<std::vector<I128>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    I128 prev = 1;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                rows[i][j] = (rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j]) / prev;
            rows[i][c] = 0;
        }
        prev = rows[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

I128 det128(std::vector<std::vector<I128>> m) {
    const std::size_t k = m.size();
    I128 prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        while (p < k && m[p][c] == 0) ++p;
        if (p == k) return 0;
        if (p != c) {
            std::swap(m[c], m[p]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < k; ++i) {
            for (std::size_t j = c + 1; j < k; ++j)
                m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[c][c];
    }
    return sign * m[k - 1][k - 1];
}

I128 gcd128(I128 a, I128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        I128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Validated facet normals (both signs) of the Minkowski sum of ent[from..],
// entirely in machine integers. Returns false when the coordinates are too
// large for the overflow-free bounds; the caller then uses the bignum path.
bool sum_facet_normals_fast(const std::vector<LatticePolytope>& ent, std::size_t from,
                            std::vector<Vec>& normals) {
    const int d = ent[from].dim;
    if (d > SMALL_DIM) return false;
    const std::size_t dd = static_cast<std::size_t>(d);
    std::vector<std::vector<V64>> parts;
    for (std::size_t j = from; j < ent.size(); ++j) {
        std::vector<V64> vs(ent[j].verts.size());
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (!to_small(ent[j].verts[i], vs[i])) return false;
        parts.push_back(std::move(vs));
    }
    // Deduped primitive pairwise difference directions, lex-positive.
    std::set<V64> dirset;
    for (const auto& vs : parts)
        for (std::size_t p = 0; p < vs.size(); ++p)
            for (std::size_t q = p + 1; q < vs.size(); ++q) {
                V64 dir(dd);
                I64 g = 0;
                for (std::size_t c = 0; c < dd; ++c) {
                    dir[c] = vs[q][c] - vs[p][c];
                    g = std::gcd(g, dir[c]);
                }
                if (g == 0) continue;
                for (auto& x : dir) x /= g;
                for (const auto& x : dir) {
                    if (x > 0) break;
                    if (x < 0) {
                        for (auto& y : dir) y = -y;
                        break;
                    }
                }
                dirset.insert(std::move(dir));
            }
    std::vector<V64> dirs(dirset.begin(), dirset.end());
    const std::size_t k = dd - 1;
    const std::size_t m = dirs.size();
    if (m < k) return true;
    // Candidate normals: signed-maximal-minor nullvectors of all k-subsets.
    std::set<V64> cands;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<std::vector<I128>> minor(k, std::vector<I128>(k));
    while (true) {
        V64 nu(dd);
        I128 g = 0;
        std::vector<I128> comp(dd);
        for (std::size_t drop = 0; drop < dd; ++drop) {
            for (std::size_t r = 0; r < k; ++r) {
                std::size_t cc = 0;
                for (std::size_t c = 0; c < dd; ++c)
                    if (c != drop) minor[r][cc++] = dirs[idx[r]][c];
            }
            comp[drop] = (drop % 2 == 0 ? 1 : -1) * det128(minor);
            g = gcd128(g, comp[drop]);
        }
        if (g != 0) {
            bool fits = true;
            for (std::size_t c = 0; c < dd; ++c) {
                I128 x = comp[c] / g;
                if (x > SMALL_LIMIT * SMALL_LIMIT || x < -SMALL_LIMIT * SMALL_LIMIT) fits = false;
                nu[c] = static_cast<I64>(x);
            }
            if (!fits) return false;
            for (const auto& x : nu) {
                if (x > 0) break;
                if (x < 0) {
                    for (auto& y : nu) y = -y;
                    break;
                }
            }
            cands.insert(std::move(nu));
        }
        std::ptrdiff_t i = static_cast<std::ptrdiff_t>(k) - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - (k - static_cast<std::size_t>(i))) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    // Validation: nu is a facet normal iff the faces of the summands at nu
    // span a (d-1)-dimensional sum.
    std::vector<std::vector<I128>> diffs;
    for (const auto& cand : cands) {
        for (int sgn = 0; sgn < 2; ++sgn) {
            diffs.clear();
            for (const auto& vs : parts) {
                I128 best = 0;
                std::size_t bi = 0;
                for (std::size_t i = 0; i < vs.size(); ++i) {
                    I128 s = 0;
                    for (std::size_t c = 0; c < dd; ++c)
                        s += static_cast<I128>(cand[c]) * vs[i][c];
                    if (sgn) s = -s;
                    if (i == 0 || s > best) {
                        best = s;
                        bi = i;
                    }
                }
                for (std::size_t i = 0; i < vs.size(); ++i) {
                    I128 s = 0;
                    for (std::size_t c = 0; c < dd; ++c)
                        s += static_cast<I128>(cand[c]) * vs[i][c];
                    if (sgn) s = -s;
                    if (i != bi && s == best) {
                        std::vector<I128> diff(dd);
                        for (std::size_t c = 0; c < dd; ++c) diff[c] = vs[i][c] - vs[bi][c];
                        diffs.push_back(std::move(diff));
                    }
                }
            }
            if (rank128(diffs) == d - 1) {
                Vec nu(dd);
                for (std::size_t c = 0; c < dd; ++c)
                    nu[c] = sgn ? Int(-cand[c]) : Int(cand[c]);
                normals.push_back(std::move(nu));
            }
        }
    }
    return true;
}

// Primitive nullvectors (lex-positive representative) of all rank-(k) subsets
// of size k drawn from dirs; candidates for facet normals of a Minkowski sum
// whose summands have these edge directions.
std::set<Vec> nullvector_candidates(const std::vector<Vec>& dirs, std::size_t k) {
    std::set<Vec> cands;
    const std::size_t m = dirs.size();
    if (m < k) return cands;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Mat rows;
        for (std::size_t i : idx) rows.push_back(dirs[i]);
        try {
            Vec nu = primitive_nullvector(rows);
            if (negate(nu) < nu) nu = negate(nu);
            cands.insert(std::move(nu));
        } catch (const std::invalid_argument&) {
        }
        std::ptrdiff_t i = static_cast<std::ptrdiff_t>(k) - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - (k - static_cast<std::size_t>(i))) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return cands;
}

// Validated facet normals (both signs) of the Minkowski sum of ent[from..],
// assuming that sum is full-dimensional: machine-integer fast path when the
// coordinates are small, bignum candidate enumeration otherwise.
std::vector<Vec> sum_facet_normals(const std::vector<LatticePolytope>& ent, std::size_t from) {
    const int d = ent[from].dim;
    std::vector<Vec> normals;
    if (sum_facet_normals_fast(ent, from, normals)) return normals;
    normals.clear();
    Mat diffs;
    std::set<Vec> dirset;
    collect_dirs(ent, from, diffs, dirset);
    std::vector<Vec> dirs(dirset.begin(), dirset.end());
    for (const auto& nu : nullvector_candidates(dirs, static_cast<std::size_t>(d - 1))) {
        if (face_sum_dim(ent, from, nu) == d - 1) normals.push_back(nu);
        Vec neg = negate(nu);
        if (face_sum_dim(ent, from, neg) == d - 1) normals.push_back(std::move(neg));
    }
    return normals;
}

// Normals carrying the nonzero terms of the support-function recursion:
// facet normals of the (never explicitly constructed) sum of entries 2..n,
// or +-(hyperplane normal) when that sum is (n-1)-dimensional. Empty with
// zero=true when the sum is flatter. A facet normal of the sum annihilates
// n-1 independent edge directions drawn from the summands, so candidates are
// the nullvectors of (n-1)-subsets of the primitive difference directions,
// validated by the dimension of the corresponding face sum.
std::vector<Vec> recursion_normals(const std::vector<LatticePolytope>& ent, bool& zero) {
    zero = false;
    const int n = ent[0].dim;
    Mat diffs;
    std::set<Vec> dirset;
    collect_dirs(ent, 1, diffs, dirset);
    const int d = rank_of(diffs);
    if (d < n - 1) {
        zero = true;
        return {};
    }
    std::vector<Vec> normals;
    if (d == n - 1) {
        HnfResult h = row_echelon_transform(diffs);
        Mat span_rows(h.echelon.begin(), h.echelon.begin() + h.rank);
        Vec nu = primitive_nullvector(span_rows);
        normals.push_back(nu);
        normals.push_back(negate(nu));
        return normals;
    }
    return sum_facet_normals(ent, 1);
}

Int mv_serial_impl(std::vector<LatticePolytope> ent);

// Kernel-lattice coordinates for ker(alpha): unimodular k with
// (k x)_{2..n} an isomorphism ker(alpha) -> Z^(n-1).
Mat kernel_coordinates(const Vec& alpha) {
    const int n = static_cast<int>(alpha.size());
    Mat col(static_cast<std::size_t>(n), Vec(1));
    for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)][0] = alpha[static_cast<std::size_t>(i)];
    HnfResult h = row_echelon_transform(col);
    assert(h.rank == 1 && h.echelon[0][0] == 1);
    // h.transform * alpha = e1, so alpha is the first column of its inverse;
    // the transpose of that inverse has first row alpha and maps ker(alpha)
    // onto {0} x Z^(n-1).
    return transpose(unimodular_inverse(h.transform));
}

// One term of the recursion: l_{ent[0]}(alpha) * MV(faces of ent[1..] in ker(alpha)).
Int face_contribution(const std::vector<LatticePolytope>& ent, const Vec& alpha) {
    const int n = static_cast<int>(ent.size());
    Int weight = support(ent[0], alpha);
    Mat k = kernel_coordinates(alpha);
    std::vector<LatticePolytope> faces;
    faces.reserve(static_cast<std::size_t>(n - 1));
    for (int j = 1; j < n; ++j) {
        LatticePolytope f = face(ent[static_cast<std::size_t>(j)], alpha);
        const Vec& base = f.verts.front();
        std::vector<Vec> verts;
        verts.reserve(f.verts.size());
        for (const auto& v : f.verts) {
            Vec w = mat_apply(k, sub(v, base));
            verts.push_back(Vec(w.begin() + 1, w.end()));
        }
        faces.push_back(polytope_from_vertices(n - 1, std::move(verts)));
    }
    return weight * mv_serial_impl(std::move(faces));
}

// Normalized volume of the Minkowski sum of parts (never built explicitly),
// by the cone decomposition over the sum's facets from the lex-min vertex:
// nvol(P) = sum over facets of (support - <normal, apex>) * nvol(facet).
// Facet normals come from the summand-direction candidates, faces stay in
// summand form and are recursed in kernel coordinates.
Int nvol_sum(const std::vector<LatticePolytope>& parts) {
    const int d = parts[0].dim;
    if (d == 0) return 1;
    if (d == 1) {
        Int len = 0;
        for (const auto& p : parts) len += p.verts.back()[0] - p.verts.front()[0];
        return len;
    }
    Mat diffs;
    std::set<Vec> dirset;
    collect_dirs(parts, 0, diffs, dirset);
    if (rank_of(diffs) < d) return 0;
    Vec apex = parts[0].verts.front();  // lex-min of the sum = sum of lex-mins
    for (std::size_t j = 1; j < parts.size(); ++j) apex = add(apex, parts[j].verts.front());
    Int total = 0;
    for (const auto& nu : sum_facet_normals(parts, 0)) {
        Int h = -dot(nu, apex);
        for (const auto& p : parts) h += support(p, nu);
        if (h == 0) continue;  // facet through the apex contributes nothing
        Mat k = kernel_coordinates(nu);
        std::vector<LatticePolytope> faces;
        faces.reserve(parts.size());
        for (const auto& p : parts) {
            LatticePolytope f = face(p, nu);
            const Vec& base = f.verts.front();
            std::vector<Vec> verts;
            verts.reserve(f.verts.size());
            for (const auto& v : f.verts) {
                Vec w = mat_apply(k, sub(v, base));
                verts.push_back(Vec(w.begin() + 1, w.end()));
            }
            faces.push_back(polytope_from_vertices(d - 1, std::move(verts)));
        }
        total += h * nvol_sum(faces);
    }
    return total;
}

// Largest entry in slot 1: only its support values are needed there.
void sort_for_recursion(std::vector<LatticePolytope>& ent) {
    std::stable_sort(ent.begin(), ent.end(), [](const LatticePolytope& a, const LatticePolytope& b) {
        return a.verts.size() > b.verts.size();
    });
}

Int mv_serial_impl(std::vector<LatticePolytope> ent) {
    const int n = static_cast<int>(ent.size());
    if (n == 0) return 1;
    if (n == 1) return ent[0].verts.back()[0] - ent[0].verts.front()[0];
    sort_for_recursion(ent);
    bool zero = false;
    std::vector<Vec> normals = recursion_normals(ent, zero);
    if (zero) return 0;
    Int total = 0;
    for (const auto& alpha : normals) total += face_contribution(ent, alpha);
    return total;
}

}  // namespace

Int mixed_volume_serial(const PolytopeTuple& a) {
    if (a.size() != a.dim) throw std::invalid_argument("mixed volume needs an n-tuple in Z^n");
    return mv_serial_impl(a.entries);
}

Int mixed_volume(const PolytopeTuple& a) {
    if (a.size() != a.dim) throw std::invalid_argument("mixed volume needs an n-tuple in Z^n");
    const int n = a.size();
    if (n <= 2) return mv_serial_impl(a.entries);
    std::vector<LatticePolytope> ent = a.entries;
    sort_for_recursion(ent);
    bool zero = false;
    std::vector<Vec> normals = recursion_normals(ent, zero);
    if (zero) return 0;
    std::vector<Int> parts(normals.size(), Int(0));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < static_cast<long>(normals.size()); ++i)
        parts[static_cast<std::size_t>(i)] = face_contribution(ent, normals[static_cast<std::size_t>(i)]);
    Int total = 0;
    for (const auto& p : parts) total += p;
    return total;
}

Int mixed_volume_oracle(const PolytopeTuple& a) {
    if (a.size() != a.dim) throw std::invalid_argument("mixed volume needs an n-tuple in Z^n");
    const int n = a.size();
    if (n == 0) return 1;
    const std::size_t full = (std::size_t{1} << n) - 1;
    Int acc = 0;
    for (std::size_t mask = 1; mask <= full; ++mask) {
        std::vector<LatticePolytope> parts;
        for (int i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) parts.push_back(a.entries[static_cast<std::size_t>(i)]);
        const int popcount = __builtin_popcountll(mask);
        Int vol = nvol_sum(parts);
        acc += ((n - popcount) % 2 == 0) ? vol : -vol;
    }
    Int nf = factorial(n);
    assert(acc % nf == 0);
    return acc / nf;
}

std::tuple<Int, Int, Int> mixed_volume_product_check(const PolytopeTuple& a,
                                                     const SublatticeFrame& u, int k) {
    if (k != u.rank()) throw std::invalid_argument("subspace rank must match k");
    std::vector<LatticePolytope> inside, outside;
    for (int i = 0; i < a.size(); ++i) {
        const LatticePolytope& e = a.entries[static_cast<std::size_t>(i)];
        if (i < k) {
            // entry must lie in a translate of span(u)
            SublatticeFrame local = u;
            local.anchor = e.verts.front();
            local.to_std.shift = negate(mat_apply(local.to_std.linear, local.anchor));
            inside.push_back(restrict_to(e, local));  // throws if containment fails
        } else {
            outside.push_back(project_along(e, u));
        }
    }
    Int total = mixed_volume(a);
    Int in_part = mixed_volume(make_tuple(k, std::move(inside)));
    Int out_part = mixed_volume(make_tuple(a.dim - k, std::move(outside)));
    return {total, in_part, out_part};
}

}  // namespace mvone
