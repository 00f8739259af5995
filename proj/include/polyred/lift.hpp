#pragma once

#include "polyred/reduction.hpp"

namespace polyred {

// The product with one extra line: the new coordinate s is appended last and
// each lifted form is omega^a + ds ∧ eta^a.
struct LiftedFamily {
    FormFamily base;
    FormFamily lifted;
    std::size_t s_index = 0;

    StructureKind base_kind, lifted_kind;
    // the iff between base and lift is only claimed when the base satisfies
    // axioms (i) and (iii); otherwise only the forward direction is checked
    bool iff_applicable = false;
    bool iff_consistent = false;
};

LiftedFamily lift_structure(const FormFamily& f);
FormFamily recover(const LiftedFamily& l);
FormFamily recover(const FormFamily& lifted);

// v -> (v, 0)
Subspace lift_subspace(const Subspace& s);
// v -> (v, t) for all t
Subspace cylinder(const Subspace& s);

ActionPointData lift_action(const ActionPointData& d);

struct LiftLemmaReport {
    std::vector<ComponentCheck> identities;  // the three subspace identities
    bool holds() const;
};

LiftLemmaReport verify_lift_lemma(const ActionPointData& d);

struct EquivalenceReport {
    bool base_nondeg = false;  // NONDEG_POLYCO on the base
    bool lift_nondeg = false;  // NONDEG_POLYSYM on the lift
    bool base_c1 = false;
    bool lift_a2 = false;
    bool base_regular = false, lift_regular = false;
    bool level_tangent_gains_one = false;
    bool verdicts_agree() const { return base_nondeg == lift_nondeg; }
    bool chain_agrees() const { return base_c1 == lift_a2; }
    bool holds() const {
        return verdicts_agree() && chain_agrees() && base_regular == lift_regular && level_tangent_gains_one;
    }
};

EquivalenceReport equivalence_check(const ActionPointData& d);

struct LiftDistributionReport {
    DistributionReport base;
    DistributionReport lifted;
    Subspace w_tilde;
};

// throws std::invalid_argument when (f, v) fails the k-cosymplectic linear axioms
LiftDistributionReport lift_distribution_check(const FormFamily& f, const Subspace& v);

}  // namespace polyred
