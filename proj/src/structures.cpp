#include "polyred/structures.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polyred {

FormFamily::FormFamily(std::size_t dim, std::vector<Matrix> omega, std::optional<std::vector<Vec>> eta)
    : dim_(dim), omega_(std::move(omega)), eta_(std::move(eta)) {
    if (omega_.empty()) throw std::invalid_argument("form family needs k >= 1 forms");
    for (std::size_t a = 0; a < omega_.size(); ++a) {
        const Matrix& w = omega_[a];
        if (w.rows() != dim_ || w.cols() != dim_)
            throw std::invalid_argument("omega[" + std::to_string(a) + "] is not " + std::to_string(dim_) + "x" +
                                        std::to_string(dim_));
        if (!w.is_skew()) throw std::invalid_argument("omega[" + std::to_string(a) + "] is not skew-symmetric");
    }
    if (eta_) {
        if (eta_->size() != omega_.size())
            throw std::invalid_argument("eta has " + std::to_string(eta_->size()) + " covectors but k = " +
                                        std::to_string(omega_.size()));
        for (const auto& e : *eta_)
            if (e.size() != dim_) throw std::invalid_argument("eta covector has wrong length");
    }
}

const std::vector<Vec>& FormFamily::eta() const {
    if (!eta_) throw std::logic_error("form family carries no eta");
    return *eta_;
}

Matrix FormFamily::eta_matrix() const { return Matrix::from_rows(eta(), dim_); }

std::string to_string(StructureTag tag) {
    switch (tag) {
        case StructureTag::Polysymplectic: return "Polysymplectic";
        case StructureTag::Polycosymplectic: return "Polycosymplectic";
        case StructureTag::PresymplecticSingle: return "PresymplecticSingle";
        case StructureTag::Invalid: return "Invalid";
    }
    return "Invalid";
}

bool StructureKind::failed(const std::string& id) const {
    return std::find(diagnostics.begin(), diagnostics.end(), id) != diagnostics.end();
}

namespace {

Matrix stacked(const FormFamily& f, bool use_eta) {
    Matrix m(0, f.dim());
    for (const auto& w : f.omega())
        for (std::size_t i = 0; i < w.rows(); ++i) m.append_row(w.row(i));
    if (use_eta)
        for (const auto& e : f.eta()) m.append_row(e);
    return m;
}

}  // namespace

Subspace joint_kernel(const FormFamily& f, bool use_eta) {
    if (use_eta && !f.has_eta()) throw std::invalid_argument("joint_kernel: eta requested but absent");
    return nullspace(stacked(f, use_eta));
}

StructureKind identify_structure(const FormFamily& f) {
    StructureKind kind;
    if (!f.has_eta()) {
        if (joint_kernel(f, false).is_zero()) {
            kind.tag = StructureTag::Polysymplectic;
        } else {
            kind.diagnostics.push_back(kPolysymJointKernel);
            kind.tag = f.k() == 1 ? StructureTag::PresymplecticSingle : StructureTag::Invalid;
        }
        return kind;
    }
    if (rank(f.eta_matrix()) != f.k()) kind.diagnostics.push_back(kAxiomEtaIndependent);
    if (!joint_kernel(f, true).is_zero()) kind.diagnostics.push_back(kAxiomJointKernel);
    if (joint_kernel(f, false).dim() != f.k()) kind.diagnostics.push_back(kAxiomOmegaKernelDim);
    kind.tag = kind.diagnostics.empty() ? StructureTag::Polycosymplectic : StructureTag::Invalid;
    return kind;
}

ReebFrame reeb_solve(const FormFamily& f) {
    StructureKind kind = identify_structure(f);
    if (kind.tag != StructureTag::Polycosymplectic)
        throw std::invalid_argument("reeb_solve: family is not polycosymplectic");
    Matrix m = stacked(f, true);
    std::size_t eta_row0 = f.k() * f.dim();
    ReebFrame frame;
    for (std::size_t a = 0; a < f.k(); ++a) {
        Vec rhs(m.rows());
        rhs[eta_row0 + a] = 1;
        auto sol = solve_linear(m, rhs);
        if (!sol) throw std::logic_error("reeb_solve: inconsistent Reeb system for a polycosymplectic family");
        if (!sol->homogeneous.is_zero()) throw std::logic_error("reeb_solve: Reeb system is not uniquely solvable");
        frame.reeb.push_back(sol->particular);
    }
    frame.span = Subspace::span(frame.reeb, f.dim());
    return frame;
}

Subspace poly_orthogonal(const Subspace& s, const FormFamily& f, const std::vector<std::size_t>& indices) {
    if (s.ambient_dim() != f.dim()) throw std::invalid_argument("poly_orthogonal: dimension mismatch");
    if (indices.empty()) throw std::invalid_argument("poly_orthogonal: empty index set");
    Matrix rows(0, f.dim());
    for (auto a : indices) {
        if (a >= f.k()) throw std::invalid_argument("poly_orthogonal: form index out of range");
        for (const auto& v : s.vectors()) rows.append_row(f.omega(a) * v);
    }
    return nullspace(rows);
}

Subspace poly_orthogonal(const Subspace& s, const FormFamily& f) {
    std::vector<std::size_t> all(f.k());
    std::iota(all.begin(), all.end(), 0);
    return poly_orthogonal(s, f, all);
}

Subspace form_kernel(const Matrix& w) { return nullspace(w); }

Subspace covector_kernel(const Vec& eta) { return nullspace(Matrix::from_rows({eta}, eta.size())); }

bool is_isotropic(const Subspace& s, const FormFamily& f) {
    auto vs = s.vectors();
    for (const auto& w : f.omega())
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (!bilinear(w, vs[i], vs[j]).is_zero()) return false;
    return true;
}

DistributionReport distribution_checks(const FormFamily& f, const Subspace& v) {
    if (v.ambient_dim() != f.dim()) throw std::invalid_argument("distribution_checks: dimension mismatch");
    DistributionReport r;
    std::size_t k = f.k(), dim = f.dim();
    StructureKind kind = identify_structure(f);
    if (f.has_eta()) {
        r.mode = "k-cosymplectic";
        r.structure_ok = kind.tag == StructureTag::Polycosymplectic;
        if (dim >= k && (dim - k) % (k + 1) == 0) r.n = static_cast<long>((dim - k) / (k + 1));
        r.not_checkable = {"involutivity of V", "[R, V] contained in V"};
    } else {
        r.mode = "k-symplectic";
        r.structure_ok = kind.tag == StructureTag::Polysymplectic;
        if (dim % (k + 1) == 0) r.n = static_cast<long>(dim / (k + 1));
        r.not_checkable = {"involutivity of V"};
    }
    r.dimension_ok = r.n >= 0;
    r.rank_ok = r.dimension_ok && v.dim() == static_cast<std::size_t>(r.n) * k;
    r.isotropic = is_isotropic(v, f);
    return r;
}

}  // namespace polyred
