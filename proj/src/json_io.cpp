#include "mvone/json_io.hpp"

#include <stdexcept>

namespace mvone {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw std::invalid_argument("malformed input at " + where + ": " + what);
}

Int int_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            bad(where, "not an integer");
        }
    }
    bad(where, "expected an integer");
}

const Json& field(const Json& j, const char* name, const std::string& where) {
    if (!j.is_object() || !j.contains(name)) bad(where, std::string("missing field '") + name + "'");
    return j.at(name);
}

}  // namespace

std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num) / Rat(den);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: " + s);
    }
}

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& x : v) {
        if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
            out.push_back(static_cast<std::int64_t>(x));
        else
            out.push_back(x.str());
    }
    return out;
}

Vec vec_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) bad(where, "expected an array of integers");
    Vec v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(int_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

Json polytope_to_json(const LatticePolytope& x) {
    Json verts = Json::array();
    for (const auto& v : x.verts) verts.push_back(vec_to_json(v));
    return Json{{"dim", x.dim}, {"vertices", verts}};
}

LatticePolytope polytope_from_json(const Json& j) {
    const int dim = static_cast<int>(int_from_json(field(j, "dim", "polytope"), "polytope.dim"));
    if (dim < 0) bad("polytope.dim", "negative dimension");
    const Json& verts = field(j, "vertices", "polytope");
    if (!verts.is_array() || verts.empty()) bad("polytope.vertices", "expected a nonempty array");
    std::vector<Vec> pts;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        Vec v = vec_from_json(verts[i], "polytope.vertices[" + std::to_string(i) + "]");
        if (static_cast<int>(v.size()) != dim)
            bad("polytope.vertices[" + std::to_string(i) + "]", "length differs from dim");
        pts.push_back(std::move(v));
    }
    return convex_hull(dim, std::move(pts));
}

Json tuple_to_json(const PolytopeTuple& a) {
    Json polys = Json::array();
    for (const auto& e : a.entries) polys.push_back(polytope_to_json(e));
    return Json{{"dim", a.dim}, {"polytopes", polys}};
}

PolytopeTuple tuple_from_json(const Json& j) {
    const int dim = static_cast<int>(int_from_json(field(j, "dim", "tuple"), "tuple.dim"));
    const Json& polys = field(j, "polytopes", "tuple");
    if (!polys.is_array()) bad("tuple.polytopes", "expected an array");
    std::vector<LatticePolytope> entries;
    for (const auto& p : polys) entries.push_back(polytope_from_json(p));
    for (const auto& e : entries)
        if (e.dim != dim) bad("tuple.polytopes", "entry dimension differs from tuple dim");
    return make_tuple(dim, std::move(entries));
}

Json certificate_to_json(const UnitCertificate& c) {
    Json trans = Json::array();
    for (const auto& v : c.translations) trans.push_back(vec_to_json(v));
    return Json{{"translations", trans}, {"simplex", polytope_to_json(c.simplex)}};
}

UnitCertificate certificate_from_json(const Json& j) {
    UnitCertificate c;
    const Json& trans = field(j, "translations", "certificate");
    if (!trans.is_array()) bad("certificate.translations", "expected an array");
    for (std::size_t i = 0; i < trans.size(); ++i)
        c.translations.push_back(vec_from_json(trans[i], "certificate.translations[" + std::to_string(i) + "]"));
    c.simplex = polytope_from_json(field(j, "simplex", "certificate"));
    return c;
}

Json decomposition_to_json(const Theorem1Decomposition& d) {
    Json steps = Json::array();
    for (const auto& s : d.steps) {
        Json basis = Json::array();
        for (const auto& row : s.frame.basis) basis.push_back(vec_to_json(row));
        steps.push_back(Json{{"indices", s.indices},
                             {"frame_basis", basis},
                             {"certificate", certificate_to_json(s.certificate)},
                             {"quotient_tuple", tuple_to_json(s.quotient_tuple)}});
    }
    return Json{{"steps", steps}};
}

Json system_to_json(const LaurentSystem& s) {
    Json polys = Json::array();
    for (const auto& p : s.polys) {
        Json terms = Json::array();
        for (const auto& [e, c] : p.terms)
            terms.push_back(Json{{"exp", vec_to_json(e)}, {"coef", rat_to_string(c)}});
        polys.push_back(Json{{"terms", terms}});
    }
    return Json{{"vars", s.n_vars}, {"polynomials", polys}};
}

LaurentSystem system_from_json(const Json& j) {
    LaurentSystem s;
    s.n_vars = static_cast<int>(int_from_json(field(j, "vars", "system"), "system.vars"));
    if (s.n_vars < 0) bad("system.vars", "negative variable count");
    const Json& polys = field(j, "polynomials", "system");
    if (!polys.is_array()) bad("system.polynomials", "expected an array");
    for (std::size_t pi = 0; pi < polys.size(); ++pi) {
        const std::string where = "system.polynomials[" + std::to_string(pi) + "]";
        LaurentPolynomial p;
        p.n_vars = s.n_vars;
        const Json& terms = field(polys[pi], "terms", where);
        if (!terms.is_array()) bad(where + ".terms", "expected an array");
        for (std::size_t ti = 0; ti < terms.size(); ++ti) {
            const std::string tw = where + ".terms[" + std::to_string(ti) + "]";
            Vec e = vec_from_json(field(terms[ti], "exp", tw), tw + ".exp");
            if (static_cast<int>(e.size()) != s.n_vars) bad(tw + ".exp", "length differs from vars");
            const Json& cf = field(terms[ti], "coef", tw);
            if (!cf.is_string()) bad(tw + ".coef", "expected a string rational");
            Rat c = rat_from_string(cf.get<std::string>());
            if (c != 0) p.terms[std::move(e)] += c;
        }
        for (auto it = p.terms.begin(); it != p.terms.end();)
            it = it->second == 0 ? p.terms.erase(it) : std::next(it);
        s.polys.push_back(std::move(p));
    }
    return s;
}

Json point_to_json(const TorusPoint& p) {
    Json coords = Json::array();
    for (const auto& c : p.coordinates) coords.push_back(rat_to_string(c));
    return Json{{"point", coords}};
}

TorusPoint point_from_json(const Json& j) {
    TorusPoint p;
    const Json& coords = field(j, "point", "point");
    if (!coords.is_array()) bad("point.point", "expected an array");
    for (const auto& c : coords) {
        if (!c.is_string()) bad("point.point", "expected string rationals");
        p.coordinates.push_back(rat_from_string(c.get<std::string>()));
    }
    return p;
}

Json plan_to_json(const SolvePlan& p) {
    Json stages = Json::array();
    for (const auto& st : p.stages) {
        Json change = Json::array();
        for (const auto& row : st.monomial_change.linear) change.push_back(vec_to_json(row));
        Json norms = Json::array();
        for (const auto& v : st.normalizing_monomials) norms.push_back(vec_to_json(v));
        stages.push_back(Json{{"monomial_change", change},
                              {"equations", st.equations},
                              {"solved_coordinates", st.solved_coordinates},
                              {"normalizing_monomials", norms}});
    }
    Json comp = Json::array();
    for (const auto& row : p.composite) comp.push_back(vec_to_json(row));
    return Json{{"vars", p.n_vars}, {"stages", stages}, {"composite", comp}};
}

}  // namespace mvone
