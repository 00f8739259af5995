#pragma once

#include "polyred/subspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyred {

// k constant skew forms on Q^n, optionally with k covectors. A form is stored
// as its skew matrix W, with omega(v, w) = v^T W w.
class FormFamily {
public:
    FormFamily() = default;
    // validates shapes and exact skewness; throws std::invalid_argument
    FormFamily(std::size_t dim, std::vector<Matrix> omega, std::optional<std::vector<Vec>> eta = std::nullopt);

    std::size_t dim() const { return dim_; }
    std::size_t k() const { return omega_.size(); }
    const std::vector<Matrix>& omega() const { return omega_; }
    const Matrix& omega(std::size_t a) const { return omega_.at(a); }
    bool has_eta() const { return eta_.has_value(); }
    const std::vector<Vec>& eta() const;
    // eta covectors stacked as a k x n matrix
    Matrix eta_matrix() const;

    friend bool operator==(const FormFamily&, const FormFamily&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Matrix> omega_;
    std::optional<std::vector<Vec>> eta_;
};

enum class StructureTag { Polysymplectic, Polycosymplectic, PresymplecticSingle, Invalid };

std::string to_string(StructureTag tag);

// diagnostic identifiers reported by identify_structure
inline constexpr const char* kAxiomEtaIndependent = "AXIOM_I_ETA_INDEPENDENT";
inline constexpr const char* kAxiomJointKernel = "AXIOM_II_JOINT_KERNEL_TRIVIAL";
inline constexpr const char* kAxiomOmegaKernelDim = "AXIOM_III_OMEGA_KERNEL_DIM_K";
inline constexpr const char* kPolysymJointKernel = "POLYSYM_JOINT_KERNEL_TRIVIAL";

struct StructureKind {
    StructureTag tag = StructureTag::Invalid;
    std::vector<std::string> diagnostics;  // failed axioms
    bool ok() const { return tag == StructureTag::Polysymplectic || tag == StructureTag::Polycosymplectic; }
    bool failed(const std::string& id) const;
};

struct ReebFrame {
    std::vector<Vec> reeb;
    Subspace span;
};

Subspace joint_kernel(const FormFamily& f, bool use_eta);
StructureKind identify_structure(const FormFamily& f);
ReebFrame reeb_solve(const FormFamily& f);

// {v : omega^a(v, S) = 0 for every a in indices}; indices are 0-based
Subspace poly_orthogonal(const Subspace& s, const FormFamily& f, const std::vector<std::size_t>& indices);
Subspace poly_orthogonal(const Subspace& s, const FormFamily& f);
// kernel of a single form
Subspace form_kernel(const Matrix& w);
// kernel of a single covector, as a subspace
Subspace covector_kernel(const Vec& eta);

// restriction of the family to a subspace: omega^a(S,S) vanishes for every a
bool is_isotropic(const Subspace& s, const FormFamily& f);

struct DistributionReport {
    std::string mode;  // "k-symplectic" or "k-cosymplectic"
    bool structure_ok = false;
    bool dimension_ok = false;  // dim = (k+1)n, or k(n+1)+n with eta
    bool rank_ok = false;       // dim V = nk
    bool isotropic = false;     // omega^a(V,V) = 0
    long n = -1;                // inferred field count, -1 when the dimension does not fit
    std::vector<std::string> not_checkable;
    bool passes() const { return structure_ok && dimension_ok && rank_ok && isotropic; }
};

DistributionReport distribution_checks(const FormFamily& f, const Subspace& v);

}  // namespace polyred
