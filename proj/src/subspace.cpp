#include "polyred/subspace.hpp"

#include <sstream>
#include <stdexcept>

namespace polyred {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("subspaces live in different ambient dimensions (" +
                                    std::to_string(a.ambient_dim()) + " vs " +
                                    std::to_string(b.ambient_dim()) + ")");
}

}  // namespace

Subspace::Subspace(std::size_t ambient_dim) : n_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(const Matrix& generators) {
    Subspace s(generators.cols());
    RrefResult r = rref_pivots(generators);
    s.basis_ = std::move(r.form);
    s.pivots_ = std::move(r.pivots);
    return s;
}

Subspace Subspace::span(const std::vector<Vec>& generators, std::size_t ambient_dim) {
    return span(Matrix::from_rows(generators, ambient_dim));
}

Subspace Subspace::whole(std::size_t ambient_dim) { return span(Matrix::identity(ambient_dim)); }

Subspace Subspace::coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& axes) {
    std::vector<Vec> gens;
    for (auto i : axes) gens.push_back(unit_vector(ambient_dim, i));
    return span(gens, ambient_dim);
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != n_) throw std::invalid_argument("vector length does not match ambient dimension");
    Vec r = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        Rational c = r[pivots_[i]];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j)
            if (!basis_(i, j).is_zero()) r[j] -= c * basis_(i, j);
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return polyred::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    require_same_ambient(*this, other);
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Subspace Subspace::annihilator() const { return nullspace(basis_); }

std::string Subspace::to_string() const {
    std::ostringstream os;
    os << "span(dim " << dim() << " in Q^" << n_ << ") " << basis_.to_string();
    return os.str();
}

Subspace nullspace(const Matrix& m) {
    RrefResult r = rref_pivots(m);
    std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> gens;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n);
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.form(i, f);
        gens.push_back(std::move(v));
    }
    return Subspace::span(gens, n);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    Matrix g = a.basis();
    for (std::size_t i = 0; i < b.dim(); ++i) g.append_row(b.basis().row(i));
    if (g.rows() == 0) return Subspace(a.ambient_dim());
    return Subspace::span(g);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    if (a.is_whole()) return b;
    if (b.is_whole()) return a;
    // (A ∩ B) is the annihilator of ann(A) + ann(B)
    return subspace_sum(a.annihilator(), b.annihilator()).annihilator();
}

Subspace image(const Matrix& m, const Subspace& s) {
    if (m.cols() != s.ambient_dim()) throw std::invalid_argument("image: dimension mismatch");
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < s.dim(); ++i) gens.push_back(m * s.basis().row(i));
    return Subspace::span(gens, m.rows());
}

Subspace direct_product(const Subspace& a, const Subspace& b) {
    std::size_t n = a.ambient_dim() + b.ambient_dim();
    std::vector<Vec> gens;
    for (const auto& v : a.vectors()) {
        Vec w(n);
        std::copy(v.begin(), v.end(), w.begin());
        gens.push_back(std::move(w));
    }
    for (const auto& v : b.vectors()) {
        Vec w(n);
        std::copy(v.begin(), v.end(), w.begin() + a.ambient_dim());
        gens.push_back(std::move(w));
    }
    return Subspace::span(gens, n);
}

Vec QuotientMap::project(const Vec& v) const {
    Vec r = b.reduce(v);
    // r lies in C; C is in RREF so its coordinates sit at C's pivot columns
    Vec coords(projected_dim);
    for (std::size_t i = 0; i < projected_dim; ++i) coords[i] = r[complement_pivots[i]];
    return coords;
}

QuotientMap quotient_map(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    if (!a.contains(b)) throw std::invalid_argument("quotient_map: B is not contained in A");
    QuotientMap q;
    q.b = b;
    std::vector<Vec> reduced;
    for (const auto& v : a.vectors()) reduced.push_back(b.reduce(v));
    Subspace c = Subspace::span(reduced, a.ambient_dim());
    q.complement = c.basis();
    q.complement_pivots = c.pivots();
    q.projected_dim = c.dim();
    q.representative = Matrix(a.dim(), q.projected_dim);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Vec coords = q.project(a.basis().row(i));
        for (std::size_t j = 0; j < q.projected_dim; ++j) q.representative(i, j) = coords[j];
    }
    return q;
}

}  // namespace polyred

namespace polyred {

std::optional<LinearSolution> solve_linear(const Matrix& m, const Vec& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve_linear: right-hand side has wrong length");
    std::size_t n = m.cols();
    Matrix aug(m.rows(), n + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = rhs[i];
    }
    RrefResult r = rref_pivots(aug);
    if (!r.pivots.empty() && r.pivots.back() == n) return std::nullopt;
    Vec x(n);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.form(i, n);
    return LinearSolution{std::move(x), nullspace(m)};
}

}  // namespace polyred
