#include "polyred/lift.hpp"

#include <stdexcept>

namespace polyred {

namespace {

void require_polyco(const ActionPointData& d, const char* who) {
    d.validate();
    if (identify_structure(d.forms).tag != StructureTag::Polycosymplectic)
        throw std::invalid_argument(std::string(who) + ": action data is not polycosymplectic");
}

}  // namespace

LiftedFamily lift_structure(const FormFamily& f) {
    if (!f.has_eta()) throw std::invalid_argument("lift_structure: eta is required");
    std::size_t n = f.dim();
    std::vector<Matrix> forms;
    for (std::size_t a = 0; a < f.k(); ++a) {
        Matrix w(n + 1, n + 1);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) w(i, j) = f.omega(a)(i, j);
            w(n, i) = f.eta()[a][i];
            w(i, n) = -f.eta()[a][i];
        }
        forms.push_back(std::move(w));
    }
    LiftedFamily l{f, FormFamily(n + 1, std::move(forms)), n, {}, {}, false, false};
    l.base_kind = identify_structure(f);
    l.lifted_kind = identify_structure(l.lifted);
    bool base_ok = l.base_kind.tag == StructureTag::Polycosymplectic;
    bool lift_ok = l.lifted_kind.tag == StructureTag::Polysymplectic;
    l.iff_applicable = !l.base_kind.failed(kAxiomEtaIndependent) && !l.base_kind.failed(kAxiomOmegaKernelDim);
    l.iff_consistent = l.iff_applicable ? base_ok == lift_ok : (!base_ok || lift_ok);
    return l;
}

FormFamily recover(const FormFamily& lifted) {
    if (lifted.dim() == 0) throw std::invalid_argument("recover: lifted family has dimension 0");
    std::size_t n = lifted.dim() - 1;
    std::vector<Matrix> omega;
    std::vector<Vec> eta;
    for (const auto& w : lifted.omega()) {
        Matrix b(n, n);
        Vec e(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) b(i, j) = w(i, j);
            e[i] = w(n, i);  // contraction of d/ds
        }
        omega.push_back(std::move(b));
        eta.push_back(std::move(e));
    }
    return FormFamily(n, std::move(omega), std::move(eta));
}

FormFamily recover(const LiftedFamily& l) { return recover(l.lifted); }

Subspace lift_subspace(const Subspace& s) { return direct_product(s, Subspace(1)); }

Subspace cylinder(const Subspace& s) { return direct_product(s, Subspace::whole(1)); }

ActionPointData lift_action(const ActionPointData& d) {
    require_polyco(d, "lift_action");
    return ActionPointData{lift_structure(d.forms).lifted, lift_subspace(d.gtilde), d.regular, d.g_dim};
}

bool LiftLemmaReport::holds() const {
    for (const auto& c : identities)
        if (!c.holds) return false;
    return true;
}

LiftLemmaReport verify_lift_lemma(const ActionPointData& d) {
    require_polyco(d, "verify_lift_lemma");
    ActionPointData ld = lift_action(d);
    DerivedGeometry base = derive_geometry(d);
    DerivedGeometry lifted = derive_geometry(ld);

    Subspace eta_kernel = nullspace(d.forms.eta_matrix());
    Subspace base_tt = poly_orthogonal(base.level_tangent, d.forms);
    Subspace lift_tt = poly_orthogonal(lifted.level_tangent, ld.forms);

    LiftLemmaReport r;
    auto add = [&](std::string label, Subspace lhs, Subspace rhs) {
        bool eq = lhs == rhs;
        r.identities.push_back({std::move(label), std::move(lhs), std::move(rhs), eq});
    };
    add("isotropy of lift = isotropy x 0", lifted.isotropy, lift_subspace(base.isotropy));
    add("gtilde^omega~ = gtilde^comega x R", lifted.level_tangent, cylinder(base.level_tangent));
    add("gtilde^omega~omega~ = (ker eta ∩ gtilde^comega comega) x 0", lift_tt,
        lift_subspace(subspace_intersect(eta_kernel, base_tt)));
    return r;
}

EquivalenceReport equivalence_check(const ActionPointData& d) {
    require_polyco(d, "equivalence_check");
    ActionPointData ld = lift_action(d);
    EquivalenceReport r;
    r.base_nondeg = check_condition(d, ConditionId::NondegPolyco).holds;
    r.lift_nondeg = check_condition(ld, ConditionId::NondegPolysym).holds;
    r.base_c1 = check_condition(d, ConditionId::C1).holds;
    r.lift_a2 = check_condition(ld, ConditionId::A2).holds;
    r.base_regular = regular_audit(d);
    r.lift_regular = regular_audit(ld);
    r.level_tangent_gains_one =
        poly_orthogonal(ld.gtilde, ld.forms).dim() == poly_orthogonal(d.gtilde, d.forms).dim() + 1;
    return r;
}

LiftDistributionReport lift_distribution_check(const FormFamily& f, const Subspace& v) {
    LiftDistributionReport r;
    r.base = distribution_checks(f, v);
    if (r.base.mode != "k-cosymplectic" || !r.base.passes())
        throw std::invalid_argument("lift_distribution_check: input fails the k-cosymplectic linear axioms");
    Subspace w = subspace_sum(v, reeb_solve(f).span);
    r.w_tilde = lift_subspace(w);
    r.lifted = distribution_checks(lift_structure(f).lifted, r.w_tilde);
    return r;
}

}  // namespace polyred
