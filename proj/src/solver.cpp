#include "mvone/solver.hpp"

#include "mvone/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mvone {

namespace {

Rat rat_pow(const Rat& base, const Int& e) {
    if (e == 0) return Rat(1);
    Int k = e < 0 ? Int(-e) : e;
    Rat b = e < 0 ? Rat(1) / base : base;
    Rat out = 1;
    for (Int i = 0; i < k; ++i) out *= b;
    return out;
}

Vec componentwise_min(const std::vector<Vec>& pts) {
    Vec m = pts.front();
    for (const auto& p : pts)
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], p[i]);
    return m;
}

// blockdiag(I_offset, m) as a full matrix of the given size.
Mat block_embed(const Mat& m, int offset, int full) {
    Mat out = identity(full);
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m.size(); ++c)
            out[r + static_cast<std::size_t>(offset)][c + static_cast<std::size_t>(offset)] = m[r][c];
    return out;
}

}  // namespace

LatticePolytope newton_polytope(const LaurentPolynomial& p) {
    if (p.terms.empty()) throw std::invalid_argument("zero polynomial has no Newton polytope");
    std::vector<Vec> pts;
    for (const auto& [e, c] : p.terms) pts.push_back(e);
    return convex_hull(p.n_vars, std::move(pts));
}

SolvePlan build_solve_plan(const LaurentSystem& s) {
    const int n = s.n_vars;
    if (static_cast<int>(s.polys.size()) != n) throw std::invalid_argument("system must be square");
    std::vector<LatticePolytope> newts;
    for (const auto& p : s.polys) newts.push_back(newton_polytope(p));
    PolytopeTuple a = make_tuple(n, newts);
    Theorem1Decomposition dec;
    try {
        dec = decompose_theorem1(a);
    } catch (const NotMixedVolumeOne&) {
        throw MixedVolumeExceedsOne(mixed_volume(a).str());
    }

    SolvePlan plan;
    plan.n_vars = n;
    plan.composite = identity(n);
    int offset = 0;
    // Working tuple mirrors the decomposition: after each stage the remaining
    // Newton polytopes live in the quotient coordinates.
    std::vector<LatticePolytope> working = newts;  // by original index; projected as we go
    std::vector<int> live(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) live[static_cast<std::size_t>(i)] = i;

    for (const auto& step : dec.steps) {
        const int ncur = n - offset;
        const int k = step.frame.rank();
        // Normalize the certified simplex to the standard k-simplex:
        // y -> g * (y - t0), with g the inverse of the vertex-difference matrix.
        const auto& tv = step.certificate.simplex.verts;
        Mat cols(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(k)));
        for (int l = 0; l < k; ++l) {
            Vec d = sub(tv[static_cast<std::size_t>(l) + 1], tv[0]);
            for (int r = 0; r < k; ++r) cols[static_cast<std::size_t>(r)][static_cast<std::size_t>(l)] = d[static_cast<std::size_t>(r)];
        }
        Mat g = unimodular_inverse(cols);
        Mat m = mat_mul(block_embed(g, 0, ncur), step.frame.to_std.linear);

        SolveStage stage;
        stage.monomial_change = UnimodularAffineMap{m, zero_vec(ncur)};
        stage.equations = step.indices;
        for (int l = 0; l < k; ++l) stage.solved_coordinates.push_back(offset + l);
        // Geometric normalizing monomial: min of the transformed support.
        std::map<int, std::size_t> pos_in_step;
        for (std::size_t j = 0; j < step.indices.size(); ++j)
            pos_in_step[step.indices[static_cast<std::size_t>(j)]] = j;
        for (int orig : step.indices) {
            std::vector<Vec> timg;
            for (const auto& x : working[static_cast<std::size_t>(orig)].verts)
                timg.push_back(mat_apply(m, x));
            stage.normalizing_monomials.push_back(componentwise_min(timg));
        }
        plan.composite = mat_mul(block_embed(m, offset, n), plan.composite);
        plan.stages.push_back(std::move(stage));

        // Project the remaining polytopes to the quotient coordinates.
        std::vector<int> next_live;
        std::set<int> used(step.indices.begin(), step.indices.end());
        std::size_t qpos = 0;
        for (int orig : live) {
            if (used.count(orig)) continue;
            working[static_cast<std::size_t>(orig)] =
                step.quotient_tuple.entries[qpos++];
            next_live.push_back(orig);
        }
        live = std::move(next_live);
        offset += k;
    }
    return plan;
}

TorusPoint execute_plan(const SolvePlan& plan, const LaurentSystem& s) {
    const int n = plan.n_vars;
    if (static_cast<int>(s.polys.size()) != n) throw std::invalid_argument("system must be square");
    struct WorkPoly {
        int orig;
        std::map<Vec, Rat> terms;  // exponents in the current working coordinates
    };
    std::vector<WorkPoly> cur;
    for (int i = 0; i < n; ++i) cur.push_back({i, s.polys[static_cast<std::size_t>(i)].terms});
    std::vector<Rat> z;  // cascade coordinates, filled stage by stage

    for (const auto& stage : plan.stages) {
        const int ncur = n - static_cast<int>(z.size());
        const int k = static_cast<int>(stage.equations.size());
        // transform exponents
        for (auto& wp : cur) {
            std::map<Vec, Rat> moved;
            for (const auto& [e, c] : wp.terms) moved[mat_apply(stage.monomial_change.linear, e)] += c;
            wp.terms = std::move(moved);
        }
        // assemble the affine-linear block
        std::vector<std::vector<Rat>> lhs(static_cast<std::size_t>(k),
                                          std::vector<Rat>(static_cast<std::size_t>(k), Rat(0)));
        std::vector<Rat> rhs(static_cast<std::size_t>(k), Rat(0));
        for (int row = 0; row < k; ++row) {
            const int orig = stage.equations[static_cast<std::size_t>(row)];
            auto it = std::find_if(cur.begin(), cur.end(), [&](const WorkPoly& w) { return w.orig == orig; });
            const Vec& norm = stage.normalizing_monomials[static_cast<std::size_t>(row)];
            for (const auto& [e, c] : it->terms) {
                Vec r = sub(e, norm);
                // after normalization the support lies in {0, e_1..e_k} x {0}
                int which = -1;
                bool valid = true;
                for (int j = 0; j < ncur; ++j) {
                    if (r[static_cast<std::size_t>(j)] == 0) continue;
                    if (j >= k || r[static_cast<std::size_t>(j)] != 1 || which >= 0) {
                        valid = false;
                        break;
                    }
                    which = j;
                }
                if (!valid) throw SingularBlock();  // coefficients inconsistent with the plan
                if (which < 0)
                    rhs[static_cast<std::size_t>(row)] -= c;
                else
                    lhs[static_cast<std::size_t>(row)][static_cast<std::size_t>(which)] += c;
            }
        }
        auto sol = solve_linear(lhs, rhs);
        if (!sol) throw SingularBlock();
        for (const auto& v : *sol) {
            if (v == 0) throw ZeroCoordinate();
            z.push_back(v);
        }
        // substitute the solved block into the remaining equations
        std::set<int> used(stage.equations.begin(), stage.equations.end());
        std::vector<WorkPoly> rest;
        for (auto& wp : cur) {
            if (used.count(wp.orig)) continue;
            WorkPoly nw;
            nw.orig = wp.orig;
            for (const auto& [e, c] : wp.terms) {
                Rat cc = c;
                for (int j = 0; j < k; ++j)
                    cc *= rat_pow((*sol)[static_cast<std::size_t>(j)], e[static_cast<std::size_t>(j)]);
                Vec tail(e.begin() + k, e.end());
                nw.terms[tail] += cc;
            }
            for (auto it = nw.terms.begin(); it != nw.terms.end();)
                it = it->second == 0 ? nw.terms.erase(it) : std::next(it);
            rest.push_back(std::move(nw));
        }
        cur = std::move(rest);
    }

    TorusPoint out;
    for (int j = 0; j < n; ++j) {
        Rat x = 1;
        for (int i = 0; i < n; ++i)
            x *= rat_pow(z[static_cast<std::size_t>(i)],
                         plan.composite[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        out.coordinates.push_back(x);
    }
    return out;
}

std::pair<TorusPoint, SolvePlan> solve_unique(const LaurentSystem& s) {
    SolvePlan plan = build_solve_plan(s);
    TorusPoint p = execute_plan(plan, s);
    if (!verify_solution(s, p)) throw std::logic_error("solver produced a point that fails verification");
    return {std::move(p), std::move(plan)};
}

bool verify_solution(const LaurentSystem& s, const TorusPoint& p) {
    for (const auto& c : p.coordinates)
        if (c == 0) return false;
    for (const auto& poly : s.polys) {
        Rat acc = 0;
        for (const auto& [e, c] : poly.terms) {
            Rat t = c;
            for (std::size_t j = 0; j < e.size(); ++j) t *= rat_pow(p.coordinates[j], e[j]);
            acc += t;
        }
        if (acc != 0) return false;
    }
    return true;
}

}  // namespace mvone
