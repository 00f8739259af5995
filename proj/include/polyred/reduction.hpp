#pragma once

#include "polyred/structures.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyred {

// Pointwise model of a Hamiltonian G-space: the forms at x and the tangent
// image of the infinitesimal action there.
struct ActionPointData {
    FormFamily forms;
    Subspace gtilde;
    bool regular = true;
    std::optional<std::size_t> g_dim;

    // throws std::invalid_argument on dimension mismatch, or when eta does
    // not vanish on gtilde
    void validate() const;
};

struct DerivedGeometry {
    Subspace level_tangent;                   // T = gtilde^omega
    Subspace isotropy;                        // gtilde ∩ T
    std::vector<Subspace> isotropy_component; // gtilde ∩ gtilde^{omega^a}
    std::vector<Subspace> per_form_kernel;    // ker omega^a
};

DerivedGeometry derive_geometry(const ActionPointData& d);

enum class ConditionId { NondegPolysym, NondegPolyco, A1, A2, C1, AlbertK1 };

std::string to_string(ConditionId id);
// accepts the identifiers NONDEG_POLYSYM, NONDEG_POLYCO, A1, A2, C1, ALBERT_K1
ConditionId parse_condition(const std::string& s);

struct ComponentCheck {
    std::string label;
    Subspace lhs, rhs;
    bool holds = false;
};

struct ConditionReport {
    ConditionId id{};
    bool holds = false;
    Subspace lhs, rhs;  // first failing component, or the single comparison
    std::vector<ComponentCheck> components;
    std::optional<bool> direct_sum;  // NONDEG_POLYCO / ALBERT_K1: D ∩ isotropy = 0
};

ConditionReport check_condition(const ActionPointData& d, ConditionId id);

struct LinearReduction {
    FormFamily reduced;
    QuotientMap quotient;     // T -> T / isotropy
    bool well_defined = false;
    StructureKind reduced_kind;
    ConditionId condition{};  // the nondegeneracy condition matching the input kind
    bool condition_holds = false;
    bool verdicts_match() const { return reduced_kind.ok() == condition_holds; }
};

LinearReduction linear_reduce(const ActionPointData& d);

struct DimensionReport {
    std::size_t dim_v = 0, dim_t = 0, dim_gtilde = 0, dim_isotropy = 0;
    std::size_t g_dim = 0;
    std::size_t reduced_dim = 0;  // dim T - dim isotropy
    long formula_dim = 0;         // dim V - k g_dim - dim G_mu
    bool formula_ok = false;
    std::size_t codim_t = 0;
    bool regularity_consistent = false;  // codim T == k g_dim
    bool free_consistent = false;        // dim gtilde == g_dim
};

DimensionReport dimension_check(const ActionPointData& d, std::size_t g_dim);
// codim T == k dim gtilde, the audit behind the regular flag
bool regular_audit(const ActionPointData& d);

}  // namespace polyred
