#include "polyred/serialize.hpp"

#include <stdexcept>

namespace polyred {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("json: " + what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::size_t count_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0) bad(std::string("field '") + key + "' must be a count");
    return v.get<std::size_t>();
}

json subspace_list(const std::vector<Subspace>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(to_json(s));
    return a;
}

json component_list(const std::vector<ComponentCheck>& cs) {
    json a = json::array();
    for (const auto& c : cs)
        a.push_back({{"label", c.label}, {"holds", c.holds}, {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}});
    return a;
}

}  // namespace

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

json to_json(const Matrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}

json to_json(const Subspace& s) {
    return {{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"generators", to_json(s.basis())}};
}

json to_json(const FormFamily& f) {
    json j = {{"dim", f.dim()}, {"k", f.k()}};
    json om = json::array();
    for (const auto& w : f.omega()) om.push_back(to_json(w));
    j["omega"] = om;
    if (f.has_eta()) {
        json e = json::array();
        for (const auto& v : f.eta()) e.push_back(to_json(v));
        j["eta"] = e;
    }
    return j;
}

json to_json(const StructureKind& k) { return {{"kind", to_string(k.tag)}, {"failed_axioms", k.diagnostics}}; }

json to_json(const ActionPointData& d) {
    json j = {{"structure", to_json(d.forms)}, {"gtilde", to_json(d.gtilde)}, {"regular", d.regular}};
    if (d.g_dim) j["g_dim"] = *d.g_dim;
    return j;
}

json to_json(const DerivedGeometry& g) {
    return {{"level_tangent", to_json(g.level_tangent)},
            {"isotropy", to_json(g.isotropy)},
            {"isotropy_component", subspace_list(g.isotropy_component)},
            {"per_form_kernel", subspace_list(g.per_form_kernel)}};
}

json to_json(const ConditionReport& r) {
    json j = {{"condition", to_string(r.id)}, {"holds", r.holds}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}};
    if (r.direct_sum) j["direct_sum"] = *r.direct_sum;
    j["components"] = component_list(r.components);
    return j;
}

json to_json(const LinearReduction& r) {
    return {{"reduced", to_json(r.reduced)},
            {"reduced_kind", to_json(r.reduced_kind)},
            {"projected_dim", r.quotient.projected_dim},
            {"complement_basis", to_json(r.quotient.complement)},
            {"representative", to_json(r.quotient.representative)},
            {"forms_descend", r.well_defined},
            {"condition", to_string(r.condition)},
            {"condition_holds", r.condition_holds},
            {"verdicts_match", r.verdicts_match()},
            {"scope", "pointwise constant-coefficient model; closedness holds trivially"}};
}

json to_json(const DimensionReport& r) {
    return {{"dim_V", r.dim_v},
            {"dim_T", r.dim_t},
            {"dim_gtilde", r.dim_gtilde},
            {"dim_isotropy", r.dim_isotropy},
            {"g_dim", r.g_dim},
            {"reduced_dim", r.reduced_dim},
            {"formula_dim", r.formula_dim},
            {"formula_ok", r.formula_ok},
            {"codim_T", r.codim_t},
            {"regularity_consistent", r.regularity_consistent},
            {"free_consistent", r.free_consistent}};
}

json to_json(const LiftLemmaReport& r) { return {{"holds", r.holds()}, {"identities", component_list(r.identities)}}; }

json to_json(const EquivalenceReport& r) {
    return {{"holds", r.holds()},
            {"base_nondeg_polyco", r.base_nondeg},
            {"lift_nondeg_polysym", r.lift_nondeg},
            {"verdicts_agree", r.verdicts_agree()},
            {"base_c1", r.base_c1},
            {"lift_a2", r.lift_a2},
            {"c1_a2_agree", r.chain_agrees()},
            {"base_regular", r.base_regular},
            {"lift_regular", r.lift_regular},
            {"level_tangent_gains_one", r.level_tangent_gains_one}};
}

json to_json(const DistributionReport& r) {
    return {{"mode", r.mode},           {"passes", r.passes()},       {"structure_ok", r.structure_ok},
            {"dimension_ok", r.dimension_ok}, {"rank_ok", r.rank_ok}, {"isotropic", r.isotropic},
            {"n", r.n},                 {"not_checkable_at_linear_level", r.not_checkable}};
}

json to_json(const MultiPoly& p) {
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back({{"c", to_json(it->second)}, {"e", it->first}});
    return {{"vars", p.vars()}, {"terms", terms}, {"text", p.to_string()}};
}

json to_json(const PolySection& s) {
    json psi = json::array(), mom = json::array();
    for (const auto& p : s.psi) psi.push_back(to_json(p));
    for (const auto& row : s.psi_mom) {
        json r = json::array();
        for (const auto& p : row) r.push_back(to_json(p));
        mom.push_back(r);
    }
    return {{"k", s.k}, {"n", s.n}, {"psi", psi}, {"psi_mom", mom}};
}

json to_json(const PolyKVector& x) {
    json legs = json::array();
    for (const auto& leg : x.legs) {
        json l = json::array();
        for (const auto& c : leg) l.push_back(c.to_string());
        legs.push_back(l);
    }
    return {{"legs", legs}};
}

json to_json(const ExampleBundle& b) {
    json j = {{"example", b.name}, {"description", b.description}, {"passed", b.all_passed()}};
    if (b.forms) j["structure"] = to_json(*b.forms);
    json subs = json::object();
    for (const auto& [name, s] : b.subspaces) subs[name] = to_json(s);
    j["subspaces"] = subs;
    json vals = json::object();
    for (const auto& [name, v] : b.values) vals[name] = v;
    j["values"] = vals;
    json checks = json::array();
    for (const auto& c : b.checks) {
        json cj = {{"check", c.label}, {"passed", c.passed}};
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    return j;
}

Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    bad("rational must be a string \"p/q\" or an integer, got " + j.dump());
}

Vec vec_from_json(const json& j) {
    if (!j.is_array()) bad("expected an array of rationals");
    Vec v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_array()) bad("expected a matrix (array of rows)");
    std::vector<Vec> rows;
    for (const auto& r : j) rows.push_back(vec_from_json(r));
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows)
        if (r.size() != cols) bad("ragged matrix");
    return Matrix::from_rows(rows, cols);
}

Subspace subspace_from_json(const json& j) {
    std::size_t n = count_field(j, "ambient_dim");
    std::vector<Vec> gens;
    for (const auto& r : field(j, "generators")) {
        Vec v = vec_from_json(r);
        if (v.size() != n) bad("subspace generator length differs from ambient_dim");
        gens.push_back(std::move(v));
    }
    return Subspace::span(gens, n);
}

FormFamily form_family_from_json(const json& j) {
    std::size_t n = count_field(j, "dim");
    const json& om = field(j, "omega");
    if (!om.is_array()) bad("omega must be an array of matrices");
    std::vector<Matrix> omega;
    for (const auto& w : om) {
        Matrix m = matrix_from_json(w);
        if (m.rows() == 0 && n == 0) m = Matrix(0, 0);
        omega.push_back(std::move(m));
    }
    if (j.contains("k") && count_field(j, "k") != omega.size()) bad("k does not match the number of omega matrices");
    std::optional<std::vector<Vec>> eta;
    if (j.contains("eta") && !j.at("eta").is_null()) {
        eta.emplace();
        for (const auto& e : j.at("eta")) eta->push_back(vec_from_json(e));
    }
    return FormFamily(n, std::move(omega), std::move(eta));
}

ActionPointData action_from_json(const json& j) {
    ActionPointData d{form_family_from_json(field(j, "structure")), subspace_from_json(field(j, "gtilde")), true,
                      std::nullopt};
    if (j.contains("regular")) d.regular = j.at("regular").get<bool>();
    if (j.contains("g_dim")) d.g_dim = count_field(j, "g_dim");
    d.validate();
    return d;
}

MultiPoly poly_from_json(const json& j) {
    auto vars = field(j, "vars").get<std::vector<std::string>>();
    return poly_from_json(j, vars);
}

MultiPoly poly_from_json(const json& j, const std::vector<std::string>& vars) {
    if (j.is_string()) return parse_poly(j.get<std::string>(), vars);
    if (j.contains("vars") && j.at("vars").get<std::vector<std::string>>() != vars) {
        MultiPoly own = poly_from_json(j);
        return own.rebase(vars);
    }
    if (j.contains("expr")) return parse_poly(j.at("expr").get<std::string>(), vars);
    MultiPoly p(vars);
    for (const auto& t : field(j, "terms")) {
        auto e = field(t, "e").get<std::vector<unsigned>>();
        if (e.size() != vars.size()) bad("term exponent vector has wrong length");
        p.add_term(e, rational_from_json(field(t, "c")));
    }
    return p;
}

PolySection section_from_json(const json& j) {
    PolySection s;
    s.k = count_field(j, "k");
    s.n = count_field(j, "n");
    std::vector<std::string> tv;
    for (std::size_t a = 0; a < s.k; ++a) tv.push_back("t" + std::to_string(a + 1));
    for (const auto& p : field(j, "psi")) s.psi.push_back(poly_from_json(p, tv));
    for (const auto& row : field(j, "psi_mom")) {
        std::vector<MultiPoly> r;
        for (const auto& p : row) r.push_back(poly_from_json(p, tv));
        s.psi_mom.push_back(std::move(r));
    }
    if (s.psi.size() != s.n || s.psi_mom.size() != s.k) bad("section component counts do not match k and n");
    for (const auto& r : s.psi_mom)
        if (r.size() != s.n) bad("section momentum row has wrong length");
    return s;
}

PolyKVector kvector_from_json(const json& j, const std::vector<std::string>& vars) {
    PolyKVector x;
    for (const auto& leg : field(j, "legs")) {
        PolyVectorField f;
        for (const auto& c : leg) f.push_back(poly_from_json(c, vars));
        x.legs.push_back(std::move(f));
    }
    return x;
}

}  // namespace polyred
