#include "mvone/certifier.hpp"

#include "mvone/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mvone {

namespace {

bool is_primitive(const Vec& v) { return gcd_vec(v) == 1; }

// A lifted polytope is a subset of the lattice points of a prism
// (base simplex) x Z. Each point is (index of a base-simplex vertex, height).
struct LiftPt {
    int base = 0;
    Int h;
};

struct LiftEnt {
    std::vector<LiftPt> pts;
    bool anchored = false;  // height fixed; never shifted
};

struct Assembled {
    std::vector<Int> shifts;                // per entry, 0 for anchored entries
    std::vector<std::pair<int, Int>> apex;  // simplex vertices as (base index, height)
};

// Vertex set of a volume-1 simplex over the standard base: every base vertex
// carries exactly one height except one carrying two consecutive heights.
std::optional<std::vector<std::pair<int, Int>>> simplex_from_heights(
    const std::vector<std::set<Int>>& heights) {
    int doubled = 0;
    std::vector<std::pair<int, Int>> apex;
    for (std::size_t q = 0; q < heights.size(); ++q) {
        const auto& hs = heights[q];
        if (hs.empty() || hs.size() > 2) return std::nullopt;
        if (hs.size() == 2) {
            if (*std::next(hs.begin()) - *hs.begin() != 1) return std::nullopt;
            ++doubled;
        }
        for (const auto& h : hs) apex.emplace_back(static_cast<int>(q), h);
    }
    if (doubled != 1) return std::nullopt;
    return apex;
}

// The chaining procedure: fix the anchored entries, translate the others
// along the fiber so that shared base vertices (other than the candidate
// fiber-edge foot k) get consistent heights, then check that the union of
// all points is the vertex set of a volume-1 simplex.
std::optional<Assembled> assemble_at_vertex(const std::vector<LiftEnt>& ents, int m, int k) {
    const std::size_t cnt = ents.size();
    // An entry with two heights over one base vertex other than k can never
    // fit: only the fiber edge over k doubles up.
    for (const auto& e : ents) {
        std::map<int, std::set<Int>> hh;
        for (const auto& p : e.pts) hh[p.base].insert(p.h);
        for (const auto& [q, hs] : hh)
            if (q != k && hs.size() > 1) return std::nullopt;
    }

    std::vector<Int> shifts(cnt, Int(0));
    std::vector<char> placed(cnt, 0);
    std::vector<std::set<Int>> uni(static_cast<std::size_t>(m) + 1);
    auto add = [&](std::size_t i) {
        for (const auto& p : ents[i].pts) uni[static_cast<std::size_t>(p.base)].insert(p.h + shifts[i]);
        placed[i] = 1;
    };

    std::size_t remaining = cnt;
    for (std::size_t i = 0; i < cnt; ++i)
        if (ents[i].anchored) {
            add(i);
            --remaining;
        }

    // Entries that cannot be chained to the anchors through a shared base
    // vertex other than k form one floating cluster: its common fiber shift
    // stays free and is resolved at the foot k afterwards.
    bool floating = false;
    std::vector<char> in_float(cnt, 0);
    while (remaining > 0) {
        std::ptrdiff_t pick = -1;
        Int c = 0;
        for (std::size_t i = 0; i < cnt && pick < 0; ++i) {
            if (placed[i]) continue;
            bool connected = false, consistent = false;
            Int cc = 0;
            for (const auto& p : ents[i].pts) {
                if (p.base == k || uni[static_cast<std::size_t>(p.base)].empty()) continue;
                const auto& hs = uni[static_cast<std::size_t>(p.base)];
                if (hs.size() > 1) return std::nullopt;
                Int c2 = *hs.begin() - p.h;
                if (connected && c2 != cc) return std::nullopt;
                cc = c2;
                connected = consistent = true;
            }
            if (connected && consistent) {
                pick = static_cast<std::ptrdiff_t>(i);
                c = cc;
            }
        }
        if (pick < 0) {
            if (!floating) {
                for (std::size_t i = 0; i < cnt; ++i)
                    if (!placed[i]) {
                        pick = static_cast<std::ptrdiff_t>(i);
                        break;
                    }
                floating = true;
            } else {
                return std::nullopt;  // chain cannot reach the remaining entries
            }
        }
        const auto i = static_cast<std::size_t>(pick);
        shifts[i] = c;
        if (floating) in_float[i] = 1;
        add(i);
        --remaining;
    }

    // Candidate global shifts for the floating cluster: match its heights at
    // the foot k against the anchored heights there.
    std::vector<Int> gcands;
    if (floating) {
        std::set<Int> anchored_k, float_k;
        for (std::size_t i = 0; i < cnt; ++i)
            for (const auto& p : ents[i].pts)
                if (p.base == k) (in_float[i] ? float_k : anchored_k).insert(p.h + shifts[i]);
        if (anchored_k.empty()) {
            gcands.push_back(0);
        } else {
            if (float_k.empty()) return std::nullopt;
            for (const auto& a : anchored_k)
                for (const auto& f : float_k) gcands.push_back(a - f);
            // smallest shift first: in the non-unique (non-essential) cases
            // this prefers the already-aligned assembly
            std::sort(gcands.begin(), gcands.end(), [](const Int& x, const Int& y) {
                return std::make_pair(abs(x), x) < std::make_pair(abs(y), y);
            });
            gcands.erase(std::unique(gcands.begin(), gcands.end()), gcands.end());
        }
    } else {
        gcands.push_back(0);
    }

    for (const auto& g : gcands) {
        std::vector<std::set<Int>> all(static_cast<std::size_t>(m) + 1);
        for (std::size_t i = 0; i < cnt; ++i)
            for (const auto& p : ents[i].pts)
                all[static_cast<std::size_t>(p.base)].insert(p.h + shifts[i] + (in_float[i] ? g : Int(0)));
        if (auto apex = simplex_from_heights(all)) {
            Assembled out;
            out.shifts = shifts;
            for (std::size_t i = 0; i < cnt; ++i)
                if (in_float[i]) out.shifts[i] += g;
            out.apex = std::move(*apex);
            return out;
        }
    }
    return std::nullopt;
}

std::map<Vec, int> vertex_index(const LatticePolytope& simplex) {
    std::map<Vec, int> idx;
    for (std::size_t l = 0; l < simplex.verts.size(); ++l)
        idx[simplex.verts[l]] = static_cast<int>(l);
    return idx;
}

// Minimal critical subtuples (dim of the sum equals the size) of b, pairwise
// disjoint for any tuple free of strictly deficient subsets.
std::vector<std::vector<int>> minimal_critical_subtuples(const PolytopeTuple& b) {
    const int kk = b.size();
    std::vector<std::vector<int>> subsets;
    for (std::size_t mask = 1; mask < (std::size_t{1} << kk); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < kk; ++i)
            if (mask & (std::size_t{1} << i)) idx.push_back(i);
        subsets.push_back(std::move(idx));
    }
    std::stable_sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& c) {
        if (a.size() != c.size()) return a.size() < c.size();
        return a < c;
    });
    std::vector<std::vector<int>> found;
    for (const auto& idx : subsets) {
        const int d = subtuple_sum_dim(b, idx);
        if (d < static_cast<int>(idx.size()))
            throw NotMixedVolumeOne("projection has a deficient subtuple");
        if (d != static_cast<int>(idx.size())) continue;
        bool covered = false;
        for (const auto& f : found)
            if (std::includes(idx.begin(), idx.end(), f.begin(), f.end())) covered = true;
        if (!covered) found.push_back(idx);
    }
    std::vector<char> seen(static_cast<std::size_t>(kk), 0);
    for (const auto& f : found)
        for (int i : f) {
            if (seen[static_cast<std::size_t>(i)])
                throw NotMixedVolumeOne("overlapping critical subtuples");
            seen[static_cast<std::size_t>(i)] = 1;
        }
    return found;
}

UnitCertificate certify_inner(const PolytopeTuple& a, std::size_t edge_index);

// Certify a critical subtuple of b inside its own span, mapped back to the
// ambient lattice: entry translations u_i with b(i) + u_i inside the
// volume-1 simplex t (the embedded certificate simplex).
struct SpanCertificate {
    std::vector<Vec> u;  // parallel to `which`
    LatticePolytope t;
};

SpanCertificate certify_in_span(const PolytopeTuple& b, const std::vector<int>& which) {
    Mat diffs;
    for (int i : which) {
        const auto& vs = b.entries[static_cast<std::size_t>(i)].verts;
        for (std::size_t j = 1; j < vs.size(); ++j) diffs.push_back(sub(vs[j], vs[0]));
    }
    SublatticeFrame fr = hermite_extend(b.dim, diffs);
    const int m = fr.rank();
    std::vector<LatticePolytope> rents;
    std::vector<Vec> bases;
    for (int i : which) {
        const auto& vs = b.entries[static_cast<std::size_t>(i)].verts;
        bases.push_back(vs[0]);
        std::vector<Vec> pts;
        for (const auto& x : vs) pts.push_back(restrict_point(sub(x, vs[0]), fr));
        rents.push_back(polytope_from_vertices(m, std::move(pts)));
    }
    UnitCertificate cert = certify_inner(make_tuple(m, std::move(rents)), 0);
    SpanCertificate out;
    std::vector<Vec> tverts;
    for (const auto& y : cert.simplex.verts) tverts.push_back(embed_point(y, fr));
    out.t = polytope_from_vertices(b.dim, std::move(tverts));
    for (std::size_t j = 0; j < which.size(); ++j)
        out.u.push_back(sub(embed_point(cert.translations[j], fr), bases[j]));
    return out;
}

UnitCertificate certify_inner(const PolytopeTuple& a, std::size_t edge_index) {
    const int n = a.dim;
    if (!is_essential(a)) throw NotMixedVolumeOne("tuple is not essential");
    if (n == 1) {
        const auto& vs = a.entries[0].verts;
        if (vs.size() != 2 || vs[1][0] - vs[0][0] != 1)
            throw NotMixedVolumeOne("entry is not a primitive segment");
        UnitCertificate c;
        c.translations = {negate(vs[0])};
        c.simplex = polytope_from_vertices(1, {zero_vec(1), unit_vec(1, 0)});
        return c;
    }

    // Projection along a chosen edge of the first entry; after the unimodular
    // change of coordinates, fiber = coordinate 0, base = coordinates 1..n-1.
    auto es = edges(a.entries[0]);
    const auto& [ev0, ev1] = es[edge_index % es.size()];
    Vec d = sub(ev1, ev0);
    if (!is_primitive(d)) throw NotMixedVolumeOne("non-primitive edge");
    SublatticeFrame ef = hermite_extend(n, {d});
    const Mat& ue = ef.to_std.linear;
    Mat ui = unimodular_inverse(ue);

    std::vector<std::vector<Vec>> tverts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (const auto& x : a.entries[static_cast<std::size_t>(i)].verts)
            tverts[static_cast<std::size_t>(i)].push_back(mat_apply(ue, x));
    auto base_of = [](const Vec& x) { return Vec(x.begin() + 1, x.end()); };
    Vec te = mat_apply(ue, ev0);
    const Int h_e = te[0];
    Vec p_e = base_of(te);

    std::vector<LatticePolytope> bents;
    for (int i = 1; i < n; ++i) {
        std::vector<Vec> pts;
        for (const auto& x : tverts[static_cast<std::size_t>(i)]) pts.push_back(base_of(x));
        bents.push_back(convex_hull(n - 1, std::move(pts)));
    }
    PolytopeTuple b = make_tuple(n - 1, bents);

    const auto groups = minimal_critical_subtuples(b);
    const std::size_t s = groups.size();
    std::vector<int> group_of(static_cast<std::size_t>(n), -1);  // by entry of a
    for (std::size_t j = 0; j < s; ++j)
        for (int i : groups[j]) group_of[static_cast<std::size_t>(i) + 1] = static_cast<int>(j);

    // Certify each critical subtuple of the projection, then lift it to a
    // volume-1 simplex containing the chosen edge.
    std::vector<Vec> vtilde(static_cast<std::size_t>(n));      // fiber-first translations
    std::vector<std::vector<Vec>> sj(s);                       // lifted simplex vertices
    for (std::size_t j = 0; j < s; ++j) {
        SpanCertificate sc = certify_in_span(b, groups[j]);
        const int mj = static_cast<int>(groups[j].size());
        auto tidx = vertex_index(sc.t);
        std::vector<LiftEnt> ents(groups[j].size() + 1);
        for (std::size_t g = 0; g < groups[j].size(); ++g) {
            const int i = groups[j][g];
            for (const auto& x : tverts[static_cast<std::size_t>(i) + 1]) {
                auto it = tidx.find(add(base_of(x), sc.u[g]));
                if (it == tidx.end()) throw NotMixedVolumeOne("entry escapes its certified simplex");
                ents[g].pts.push_back({it->second, x[0]});
            }
        }
        LiftEnt& edge_ent = ents.back();
        edge_ent.anchored = true;
        bool lifted = false;
        for (int k = 0; k <= mj && !lifted; ++k) {
            edge_ent.pts = {{k, h_e}, {k, h_e + 1}};
            auto asm_res = assemble_at_vertex(ents, mj, k);
            if (!asm_res) continue;
            lifted = true;
            Vec wk = sub(p_e, sc.t.verts[static_cast<std::size_t>(k)]);
            for (std::size_t g = 0; g < groups[j].size(); ++g) {
                const int i = groups[j][g];
                Vec base_shift = add(sc.u[g], wk);
                Vec full(static_cast<std::size_t>(n));
                full[0] = asm_res->shifts[g];
                std::copy(base_shift.begin(), base_shift.end(), full.begin() + 1);
                vtilde[static_cast<std::size_t>(i) + 1] = full;
            }
            for (const auto& [idx, h] : asm_res->apex) {
                Vec pt(static_cast<std::size_t>(n));
                pt[0] = h;
                Vec bb = add(sc.t.verts[static_cast<std::size_t>(idx)], wk);
                std::copy(bb.begin(), bb.end(), pt.begin() + 1);
                sj[j].push_back(std::move(pt));
            }
        }
        if (!lifted) throw NotMixedVolumeOne("no lift of a critical subtuple");
    }

    // Reduced projection: every entry of a certified subtuple is replaced by
    // the hull of the projected union of the first entry and all lifted
    // simplices; then recurse.
    std::vector<Vec> ppts;
    for (const auto& x : tverts[0]) ppts.push_back(base_of(x));
    for (const auto& simp : sj)
        for (const auto& x : simp) ppts.push_back(base_of(x));
    LatticePolytope p = convex_hull(n - 1, ppts);
    std::vector<LatticePolytope> bprime;
    for (int i = 1; i < n; ++i)
        bprime.push_back(group_of[static_cast<std::size_t>(i)] >= 0 ? p
                                                                    : bents[static_cast<std::size_t>(i) - 1]);
    UnitCertificate cprime = certify_inner(make_tuple(n - 1, std::move(bprime)), 0);
    const LatticePolytope& tp = cprime.simplex;
    auto tpidx = vertex_index(tp);

    // Base shift of the combined first entry (first entry plus the lifted
    // simplices): shared by the replaced entries, or searched directly when
    // no subtuple was replaced.
    std::vector<Vec> head_shifts;
    if (s > 0) {
        Vec common = cprime.translations[static_cast<std::size_t>(groups[0][0])];
        for (const auto& g : groups)
            for (int i : g)
                if (cprime.translations[static_cast<std::size_t>(i)] != common)
                    throw NotMixedVolumeOne("replaced entries disagree on translation");
        head_shifts.push_back(common);
    } else {
        const Vec& q0 = p.verts[0];
        for (const auto& t : tp.verts) {
            Vec w1 = sub(t, q0);
            bool inside = true;
            for (const auto& q : p.verts)
                if (!tpidx.count(add(q, w1))) inside = false;
            if (inside) head_shifts.push_back(w1);
        }
        if (head_shifts.empty()) throw NotMixedVolumeOne("first entry does not fit the reduced simplex");
    }

    for (const auto& head : head_shifts) {
        std::vector<LiftEnt> ents;
        std::vector<int> ent_entry;  // original entry per unanchored lift entry, -1 for the head
        {
            LiftEnt e0;
            for (const auto& x : tverts[0]) {
                auto it = tpidx.find(add(base_of(x), head));
                if (it == tpidx.end()) throw NotMixedVolumeOne("first entry escapes the reduced simplex");
                e0.pts.push_back({it->second, x[0]});
            }
            for (const auto& simp : sj)
                for (const auto& x : simp) {
                    auto it = tpidx.find(add(base_of(x), head));
                    if (it == tpidx.end()) throw NotMixedVolumeOne("lifted simplex escapes the reduced simplex");
                    e0.pts.push_back({it->second, x[0]});
                }
            ents.push_back(std::move(e0));
            ent_entry.push_back(-1);
        }
        for (int i = 1; i < n; ++i) {
            if (group_of[static_cast<std::size_t>(i)] >= 0) continue;
            LiftEnt e;
            const Vec& u = cprime.translations[static_cast<std::size_t>(i) - 1];
            bool fits = true;
            for (const auto& x : tverts[static_cast<std::size_t>(i)]) {
                auto it = tpidx.find(add(base_of(x), u));
                if (it == tpidx.end()) {
                    fits = false;
                    break;
                }
                e.pts.push_back({it->second, x[0]});
            }
            if (!fits) throw NotMixedVolumeOne("projected entry escapes the reduced simplex");
            ents.push_back(std::move(e));
            ent_entry.push_back(i);
        }

        for (int k = 0; k < n; ++k) {
            auto asm_res = assemble_at_vertex(ents, n - 1, k);
            if (!asm_res) continue;
            UnitCertificate out;
            out.translations.assign(static_cast<std::size_t>(n), Vec());
            for (std::size_t t = 0; t < ents.size(); ++t) {
                const int i = ent_entry[t];
                Vec full(static_cast<std::size_t>(n));
                full[0] = asm_res->shifts[t];
                if (i < 0) {
                    std::copy(head.begin(), head.end(), full.begin() + 1);
                    out.translations[0] = mat_apply(ui, full);
                } else {
                    const Vec& u = cprime.translations[static_cast<std::size_t>(i) - 1];
                    std::copy(u.begin(), u.end(), full.begin() + 1);
                    out.translations[static_cast<std::size_t>(i)] = mat_apply(ui, full);
                }
            }
            // replaced entries ride with the head: their inner-lift position
            // shifted by the head's base translation and fiber shift
            for (int i = 1; i < n; ++i) {
                if (group_of[static_cast<std::size_t>(i)] < 0) continue;
                Vec full = vtilde[static_cast<std::size_t>(i)];
                full[0] += asm_res->shifts[0];
                for (int c = 0; c < n - 1; ++c)
                    full[static_cast<std::size_t>(c) + 1] += head[static_cast<std::size_t>(c)];
                out.translations[static_cast<std::size_t>(i)] = mat_apply(ui, full);
            }
            std::vector<Vec> sverts;
            for (const auto& [idx, h] : asm_res->apex) {
                Vec pt(static_cast<std::size_t>(n));
                pt[0] = h;
                const Vec& bb = tp.verts[static_cast<std::size_t>(idx)];
                std::copy(bb.begin(), bb.end(), pt.begin() + 1);
                sverts.push_back(mat_apply(ui, pt));
            }
            out.simplex = polytope_from_vertices(n, std::move(sverts));
            return out;
        }
    }
    throw NotMixedVolumeOne("no lift assembles a volume-1 simplex");
}

}  // namespace

UnitCertificate certify_unit(const PolytopeTuple& a, std::size_t edge_index) {
    if (a.size() != a.dim) throw std::invalid_argument("certify_unit needs an n-tuple in Z^n");
    if (!is_essential(a)) throw NotEssential();
    return certify_inner(a, edge_index);
}

LiftResult lift_translations(const PolytopeTuple& lifted, const UnitCertificate& base_certificate) {
    const int m = lifted.dim - 1;
    if (m < 1) throw std::invalid_argument("lifted tuple needs ambient dimension at least 2");
    if (static_cast<int>(base_certificate.translations.size()) != lifted.size())
        throw std::invalid_argument("certificate length mismatch");
    auto tidx = vertex_index(base_certificate.simplex);
    std::vector<LiftEnt> ents(static_cast<std::size_t>(lifted.size()));
    for (int i = 0; i < lifted.size(); ++i) {
        auto& e = ents[static_cast<std::size_t>(i)];
        e.anchored = (i == 0);
        const Vec& u = base_certificate.translations[static_cast<std::size_t>(i)];
        for (const auto& x : lifted.entries[static_cast<std::size_t>(i)].verts) {
            Vec bb = add(Vec(x.begin(), x.end() - 1), u);
            auto it = tidx.find(bb);
            if (it == tidx.end()) throw NoLift();
            e.pts.push_back({it->second, x.back()});
        }
    }
    for (int k = 0; k <= m; ++k) {
        auto asm_res = assemble_at_vertex(ents, m, k);
        if (!asm_res) continue;
        LiftResult out;
        out.heights = asm_res->shifts;
        std::vector<Vec> sverts;
        for (const auto& [idx, h] : asm_res->apex) {
            Vec pt = base_certificate.simplex.verts[static_cast<std::size_t>(idx)];
            pt.push_back(h);
            sverts.push_back(std::move(pt));
        }
        out.simplex = polytope_from_vertices(m + 1, std::move(sverts));
        return out;
    }
    throw NoLift();
}

Theorem1Decomposition decompose_theorem1(const PolytopeTuple& a) {
    if (a.size() != a.dim) throw std::invalid_argument("decompose_theorem1 needs an n-tuple in Z^n");
    Theorem1Decomposition out;
    PolytopeTuple cur = a;
    std::vector<int> orig(static_cast<std::size_t>(a.size()));
    std::iota(orig.begin(), orig.end(), 0);
    while (cur.size() > 0) {
        std::vector<int> which;
        SublatticeFrame fr;
        try {
            std::tie(which, fr) = maximal_essential_subtuple(cur);
        } catch (ZeroMixedVolume& z) {
            std::vector<int> mapped;
            for (int i : z.witness) mapped.push_back(orig[static_cast<std::size_t>(i)]);
            throw ZeroMixedVolume(std::move(mapped));
        }
        const int k = fr.rank();
        std::vector<LatticePolytope> rents;
        for (int i : which) {
            const auto& vs = cur.entries[static_cast<std::size_t>(i)].verts;
            std::vector<Vec> pts;
            for (const auto& x : vs) pts.push_back(restrict_point(sub(x, vs[0]), fr));
            rents.push_back(polytope_from_vertices(k, std::move(pts)));
        }
        DecompositionStep step;
        step.certificate = certify_unit(make_tuple(k, std::move(rents)), 0);
        step.frame = fr;
        for (int i : which) step.indices.push_back(orig[static_cast<std::size_t>(i)]);
        std::vector<LatticePolytope> rest;
        std::vector<int> rest_orig;
        std::set<int> in_step(which.begin(), which.end());
        for (int i = 0; i < cur.size(); ++i) {
            if (in_step.count(i)) continue;
            rest.push_back(project_along(cur.entries[static_cast<std::size_t>(i)], fr));
            rest_orig.push_back(orig[static_cast<std::size_t>(i)]);
        }
        step.quotient_tuple = make_tuple(cur.dim - k, rest);
        out.steps.push_back(std::move(step));
        cur = out.steps.back().quotient_tuple;
        orig = std::move(rest_orig);
    }
    return out;
}

bool verify_certificate(const PolytopeTuple& a, const UnitCertificate& c) {
    const int n = a.dim;
    if (static_cast<int>(c.translations.size()) != a.size()) return false;
    if (static_cast<int>(c.simplex.verts.size()) != n + 1) return false;
    if (affine_dim(c.simplex) != n || normalized_volume(c.simplex) != 1) return false;
    auto tidx = vertex_index(c.simplex);
    for (int i = 0; i < a.size(); ++i)
        for (const auto& x : a.entries[static_cast<std::size_t>(i)].verts)
            if (!tidx.count(add(x, c.translations[static_cast<std::size_t>(i)]))) return false;
    return true;
}

std::int64_t count_unit_simplices_containing_axes(int n) {
    if (n < 2 || n > 4) throw std::invalid_argument("supported range is 2 <= n <= 4");
    // A qualifying simplex has, for every axis i, two vertices differing by
    // e_i. Enumerate the assignments i -> ordered vertex pair; consistent
    // assignments are exactly the spanning trees on the n+1 vertices, each
    // determining the vertex positions up to translation.
    const int pair_count = n * (n + 1);
    std::vector<std::pair<int, int>> pairs;
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q)
            if (p != q) pairs.emplace_back(p, q);
    std::int64_t total_assignments = 1;
    for (int i = 0; i < n; ++i) total_assignments *= pair_count;

    std::set<std::vector<Vec>> canon;
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        std::set<std::vector<Vec>> local;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (std::int64_t code = 0; code < total_assignments; ++code) {
            std::int64_t c = code;
            std::vector<std::pair<int, int>> pick(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                pick[static_cast<std::size_t>(i)] = pairs[static_cast<std::size_t>(c % pair_count)];
                c /= pair_count;
            }
            // spanning-tree check via union-find
            std::vector<int> parent(static_cast<std::size_t>(n) + 1);
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](int x) {
                while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
                return x;
            };
            bool tree = true;
            for (const auto& [pq, qq] : pick) {
                int rp = find(pq), rq = find(qq);
                if (rp == rq) {
                    tree = false;
                    break;
                }
                parent[static_cast<std::size_t>(rp)] = rq;
            }
            if (!tree) continue;
            // solve vertex positions by walking the tree from vertex 0
            std::vector<Vec> w(static_cast<std::size_t>(n) + 1);
            std::vector<char> known(static_cast<std::size_t>(n) + 1, 0);
            w[0] = zero_vec(n);
            known[0] = 1;
            bool progress = true;
            while (progress) {
                progress = false;
                for (int i = 0; i < n; ++i) {
                    auto [pp, qq] = pick[static_cast<std::size_t>(i)];
                    if (known[static_cast<std::size_t>(pp)] && !known[static_cast<std::size_t>(qq)]) {
                        w[static_cast<std::size_t>(qq)] = add(w[static_cast<std::size_t>(pp)], unit_vec(n, i));
                        known[static_cast<std::size_t>(qq)] = 1;
                        progress = true;
                    } else if (known[static_cast<std::size_t>(qq)] && !known[static_cast<std::size_t>(pp)]) {
                        w[static_cast<std::size_t>(pp)] = sub(w[static_cast<std::size_t>(qq)], unit_vec(n, i));
                        known[static_cast<std::size_t>(pp)] = 1;
                        progress = true;
                    }
                }
            }
            Mat diffs;
            for (int j = 1; j <= n; ++j) diffs.push_back(sub(w[static_cast<std::size_t>(j)], w[0]));
            Int dd = det_int(diffs);
            if (dd != 1 && dd != -1) continue;
            Vec least = w[0];
            for (const auto& x : w) least = std::min(least, x);
            std::vector<Vec> key;
            for (const auto& x : w) key.push_back(sub(x, least));
            std::sort(key.begin(), key.end());
            local.insert(std::move(key));
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        canon.insert(local.begin(), local.end());
    }
    return static_cast<std::int64_t>(canon.size());
}

bool uniqueness_check(const PolytopeTuple& a, const UnitCertificate& c1, const UnitCertificate& c2) {
    if (!verify_certificate(a, c1) || !verify_certificate(a, c2)) return false;
    if (c1.translations.empty()) return true;
    Vec diff = sub(c1.translations[0], c2.translations[0]);
    for (std::size_t i = 1; i < c1.translations.size(); ++i)
        if (sub(c1.translations[i], c2.translations[i]) != diff) return false;
    return true;
}

}  // namespace mvone
