#include "polyred/reduction.hpp"

#include <stdexcept>

namespace polyred {

void ActionPointData::validate() const {
    if (gtilde.ambient_dim() != forms.dim())
        throw std::invalid_argument("action data: gtilde lives in Q^" + std::to_string(gtilde.ambient_dim()) +
                                    " but the forms act on Q^" + std::to_string(forms.dim()));
    if (forms.has_eta())
        for (std::size_t a = 0; a < forms.k(); ++a)
            for (const auto& v : gtilde.vectors())
                if (!dot(forms.eta()[a], v).is_zero())
                    throw std::invalid_argument("action data: eta^" + std::to_string(a + 1) +
                                                " does not vanish on gtilde");
}

DerivedGeometry derive_geometry(const ActionPointData& d) {
    d.validate();
    DerivedGeometry g;
    g.level_tangent = poly_orthogonal(d.gtilde, d.forms);
    g.isotropy = subspace_intersect(d.gtilde, g.level_tangent);
    for (std::size_t a = 0; a < d.forms.k(); ++a) {
        g.isotropy_component.push_back(subspace_intersect(d.gtilde, poly_orthogonal(d.gtilde, d.forms, {a})));
        g.per_form_kernel.push_back(form_kernel(d.forms.omega(a)));
    }
    return g;
}

std::string to_string(ConditionId id) {
    switch (id) {
        case ConditionId::NondegPolysym: return "NONDEG_POLYSYM";
        case ConditionId::NondegPolyco: return "NONDEG_POLYCO";
        case ConditionId::A1: return "A1";
        case ConditionId::A2: return "A2";
        case ConditionId::C1: return "C1";
        case ConditionId::AlbertK1: return "ALBERT_K1";
    }
    return "?";
}

ConditionId parse_condition(const std::string& s) {
    for (auto id : {ConditionId::NondegPolysym, ConditionId::NondegPolyco, ConditionId::A1, ConditionId::A2,
                    ConditionId::C1, ConditionId::AlbertK1})
        if (to_string(id) == s) return id;
    throw std::invalid_argument("unknown condition '" + s + "'");
}

namespace {

ComponentCheck compare(std::string label, Subspace lhs, Subspace rhs) {
    bool eq = lhs == rhs;
    return {std::move(label), std::move(lhs), std::move(rhs), eq};
}

// ∩_a (isotropy_a + K_a) ∩ T, where K_a is supplied per form
Subspace isotropy_bound(const DerivedGeometry& g, const std::vector<Subspace>& kernels) {
    Subspace acc = g.level_tangent;
    for (std::size_t a = 0; a < kernels.size(); ++a)
        acc = subspace_intersect(acc, subspace_sum(g.isotropy_component[a], kernels[a]));
    return acc;
}

void require_eta(const ActionPointData& d, ConditionId id) {
    if (!d.forms.has_eta())
        throw std::invalid_argument("condition " + to_string(id) + " needs eta covectors");
}

}  // namespace

ConditionReport check_condition(const ActionPointData& d, ConditionId id) {
    DerivedGeometry g = derive_geometry(d);
    ConditionReport r;
    r.id = id;
    switch (id) {
        case ConditionId::NondegPolysym: {
            Subspace tt = poly_orthogonal(g.level_tangent, d.forms);
            r.components.push_back(compare("isotropy = T ∩ T^omega", g.isotropy,
                                           subspace_intersect(g.level_tangent, tt)));
            break;
        }
        case ConditionId::AlbertK1:
            if (d.forms.k() != 1) throw std::invalid_argument("ALBERT_K1 applies to k = 1 only");
            [[fallthrough]];
        case ConditionId::NondegPolyco: {
            require_eta(d, id);
            Subspace dist = reeb_solve(d.forms).span;
            Subspace tt = poly_orthogonal(g.level_tangent, d.forms);
            r.direct_sum = subspace_intersect(dist, g.isotropy).is_zero();
            r.components.push_back(compare("D + isotropy = T ∩ T^omega", subspace_sum(dist, g.isotropy),
                                           subspace_intersect(g.level_tangent, tt)));
            break;
        }
        case ConditionId::A1:
            for (std::size_t a = 0; a < d.forms.k(); ++a) {
                Subspace lhs = poly_orthogonal(d.gtilde, d.forms, {a});
                Subspace rhs = subspace_sum(subspace_sum(g.level_tangent, g.per_form_kernel[a]),
                                            g.isotropy_component[a]);
                r.components.push_back(compare("form " + std::to_string(a + 1), lhs, rhs));
            }
            break;
        case ConditionId::A2:
            r.components.push_back(compare("isotropy bound", g.isotropy, isotropy_bound(g, g.per_form_kernel)));
            break;
        case ConditionId::C1: {
            require_eta(d, id);
            std::vector<Subspace> kernels;
            for (std::size_t a = 0; a < d.forms.k(); ++a)
                kernels.push_back(subspace_intersect(g.per_form_kernel[a], covector_kernel(d.forms.eta()[a])));
            r.components.push_back(compare("isotropy bound", g.isotropy, isotropy_bound(g, kernels)));
            break;
        }
    }
    r.holds = true;
    for (const auto& c : r.components) r.holds = r.holds && c.holds;
    if (r.direct_sum && !*r.direct_sum) r.holds = false;
    const ComponentCheck* shown = &r.components.front();
    for (const auto& c : r.components)
        if (!c.holds) {
            shown = &c;
            break;
        }
    r.lhs = shown->lhs;
    r.rhs = shown->rhs;
    return r;
}

LinearReduction linear_reduce(const ActionPointData& d) {
    DerivedGeometry g = derive_geometry(d);
    QuotientMap q = quotient_map(g.level_tangent, g.isotropy);
    const Matrix& c = q.complement;
    Matrix ct = c.transpose();

    // descent needs isotropy inside the radical of every form restricted to T,
    // and inside ker eta^a
    bool ok = true;
    for (const auto& b : g.isotropy.vectors()) {
        for (std::size_t a = 0; a < d.forms.k(); ++a) {
            for (const auto& t : g.level_tangent.vectors())
                if (!bilinear(d.forms.omega(a), b, t).is_zero()) ok = false;
            if (d.forms.has_eta() && !dot(d.forms.eta()[a], b).is_zero()) ok = false;
        }
    }
    if (!ok) throw std::logic_error("linear_reduce: forms do not descend to the quotient");

    std::vector<Matrix> omega;
    for (const auto& w : d.forms.omega()) omega.push_back(c * w * ct);
    std::optional<std::vector<Vec>> eta;
    if (d.forms.has_eta()) {
        eta.emplace();
        for (const auto& e : d.forms.eta()) eta->push_back(vec_times(e, ct));
    }
    LinearReduction r{FormFamily(q.projected_dim, std::move(omega), std::move(eta)), q, ok, {}, {}, false};
    r.reduced_kind = identify_structure(r.reduced);
    r.condition = d.forms.has_eta() ? ConditionId::NondegPolyco : ConditionId::NondegPolysym;
    r.condition_holds = check_condition(d, r.condition).holds;
    return r;
}

bool regular_audit(const ActionPointData& d) {
    Subspace t = poly_orthogonal(d.gtilde, d.forms);
    return d.forms.dim() - t.dim() == d.forms.k() * d.gtilde.dim();
}

DimensionReport dimension_check(const ActionPointData& d, std::size_t g_dim) {
    DerivedGeometry g = derive_geometry(d);
    DimensionReport r;
    r.dim_v = d.forms.dim();
    r.dim_t = g.level_tangent.dim();
    r.dim_gtilde = d.gtilde.dim();
    r.dim_isotropy = g.isotropy.dim();
    r.g_dim = g_dim;
    r.reduced_dim = r.dim_t - r.dim_isotropy;
    r.formula_dim = static_cast<long>(r.dim_v) - static_cast<long>(d.forms.k() * g_dim) -
                    static_cast<long>(r.dim_isotropy);
    r.formula_ok = r.formula_dim == static_cast<long>(r.reduced_dim);
    r.codim_t = r.dim_v - r.dim_t;
    r.regularity_consistent = r.codim_t == d.forms.k() * g_dim;
    r.free_consistent = r.dim_gtilde == g_dim;
    return r;
}

}  // namespace polyred
