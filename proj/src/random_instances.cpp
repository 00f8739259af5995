#include "polyred/random_instances.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyred {

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
    std::uint64_t z = master_seed + 0x9e3779b97f4a7c15ull * (trial_index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Vec random_vector(Rng& rng, std::size_t n, long box) {
    Vec v(n);
    for (auto& x : v) x = uniform_int(rng, -box, box);
    return v;
}

Vec sparse_vector(Rng& rng, std::size_t n, int zero_percent) {
    Vec v(n);
    for (auto& x : v)
        if (uniform_int(rng, 0, 99) >= zero_percent) x = uniform_int(rng, 0, 1) ? 1 : -1;
    return v;
}

Matrix random_invertible(Rng& rng, std::size_t n, long box) {
    for (;;) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = uniform_int(rng, -box, box);
        if (rank(m) == n) return m;
    }
}

FormFamily change_basis(const FormFamily& f, const Matrix& a) {
    Matrix at = a.transpose();
    std::vector<Matrix> omega;
    for (const auto& w : f.omega()) omega.push_back(at * w * a);
    if (!f.has_eta()) return FormFamily(f.dim(), std::move(omega));
    std::vector<Vec> eta;
    for (const auto& e : f.eta()) eta.push_back(vec_times(e, a));
    return FormFamily(f.dim(), std::move(omega), std::move(eta));
}

Subspace to_new_coordinates(const Subspace& s, const Matrix& a) { return image(inverse(a), s); }

namespace {

Subspace random_subspace_of(Rng& rng, const Subspace& host, std::size_t dim, long box) {
    // random combinations of the host basis, retried until independent
    auto basis = host.vectors();
    for (;;) {
        std::vector<Vec> gens;
        for (std::size_t i = 0; i < dim; ++i) {
            Vec coeffs = random_vector(rng, basis.size(), box);
            Vec v(host.ambient_dim());
            for (std::size_t j = 0; j < basis.size(); ++j) v = axpy(coeffs[j], basis[j], v);
            gens.push_back(std::move(v));
        }
        Subspace s = Subspace::span(gens, host.ambient_dim());
        if (s.dim() == dim) return s;
    }
}

Matrix darboux_skew(std::size_t n, std::size_t rank) {
    Matrix w(n, n);
    for (std::size_t i = 0; 2 * i + 1 < rank; ++i) {
        w(2 * i, 2 * i + 1) = 1;
        w(2 * i + 1, 2 * i) = -1;
    }
    return w;
}

}  // namespace

PresymplecticSample random_presymplectic(Rng& rng, std::size_t dim_max, bool adversarial) {
    std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(dim_max)));
    std::size_t r = 2 * static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n / 2)));
    Matrix a = random_invertible(rng, n);
    FormFamily f = change_basis(FormFamily(n, {darboux_skew(n, r)}), a);
    std::size_t sdim = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n)));
    Subspace s = random_subspace_of(rng, Subspace::whole(n), sdim, 3);
    Subspace ker = form_kernel(f.omega(0));
    if (adversarial && !ker.is_zero()) {
        // plant a kernel direction inside S
        Subspace planted = random_subspace_of(rng, ker, 1, 3);
        s = subspace_sum(s, planted);
    }
    return {f, s};
}

FormFamily random_polycosymplectic(Rng& rng, std::size_t k, std::size_t n) {
    FormFamily f = standard_model(k, n, true);
    return change_basis(f, random_invertible(rng, f.dim()));
}

FormFamily random_lift_candidate(Rng& rng, std::size_t dim_max, std::size_t k_max, bool adversarial) {
    std::size_t k = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(k_max)));
    long n_max = std::max<long>(1, (static_cast<long>(dim_max) - static_cast<long>(k)) / static_cast<long>(k + 1));
    std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, n_max));
    FormFamily f = standard_model(k, n, true);
    if (adversarial) {
        // eta^a = sum_b M_ab dt^b + (planted q-part) with rank M = k - 1; the
        // missing rank moves onto q1 so eta stays independent while a
        // t-direction falls into the joint kernel
        StandardIndex ix{k, n, true};
        Matrix m;
        for (;;) {
            Matrix g(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) g(i, j) = uniform_int(rng, -2, 2);
            m = g;
            if (rank(m) == k - 1) break;
            if (k == 1) {
                m = Matrix(1, 1);
                break;
            }
        }
        Subspace left_null = nullspace(m.transpose());
        Vec y = left_null.vectors().front();
        std::size_t a0 = 0;
        while (y[a0].is_zero()) ++a0;
        std::vector<Vec> eta;
        for (std::size_t a = 0; a < k; ++a) {
            Vec e(f.dim());
            for (std::size_t b = 0; b < k; ++b) e[ix.t(b)] = m(a, b);
            if (a == a0) e[ix.q(0)] = 1;
            eta.push_back(std::move(e));
        }
        f = FormFamily(f.dim(), f.omega(), std::move(eta));
    }
    return change_basis(f, random_invertible(rng, f.dim()));
}

namespace {

// gtilde drawn in Darboux coordinates from the given axes, then transported
Subspace draw_gtilde(Rng& rng, std::size_t dim, const std::vector<std::size_t>& axes, std::size_t m,
                     bool adversarial) {
    for (;;) {
        std::vector<Vec> gens;
        for (std::size_t i = 0; i < m; ++i) {
            Vec local = adversarial ? sparse_vector(rng, axes.size(), 50) : random_vector(rng, axes.size(), 3);
            Vec v(dim);
            for (std::size_t j = 0; j < axes.size(); ++j) v[axes[j]] = local[j];
            gens.push_back(std::move(v));
        }
        Subspace s = Subspace::span(gens, dim);
        if (s.dim() == m) return s;
    }
}

}  // namespace

namespace {

// sum of `pairs` random rank-2 skew forms x^y with sparse {-1,0,1} factors
Matrix random_low_rank_skew(Rng& rng, std::size_t dim, std::size_t pairs) {
    Matrix w(dim, dim);
    for (std::size_t r = 0; r < pairs; ++r) {
        Vec x = sparse_vector(rng, dim, 40), y = sparse_vector(rng, dim, 40);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) w(i, j) += x[i] * y[j] - y[i] * x[j];
    }
    return w;
}

// polysymplectic families that are usually not of Darboux type; A1 fails on
// them far more often than on standard models
std::optional<ActionPointData> low_rank_action(Rng& rng, std::size_t dim_max, std::size_t k_max) {
    std::size_t k = static_cast<std::size_t>(uniform_int(rng, 2, static_cast<long>(k_max)));
    std::size_t dim = static_cast<std::size_t>(uniform_int(rng, 3, static_cast<long>(std::min<std::size_t>(dim_max, 7))));
    std::vector<Matrix> omega;
    for (std::size_t a = 0; a < k; ++a)
        omega.push_back(random_low_rank_skew(rng, dim, static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(dim / 2)))));
    FormFamily f(dim, omega, std::nullopt);
    if (!identify_structure(f).ok()) return std::nullopt;
    std::size_t m = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(std::max<std::size_t>(1, dim / k))));
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < m; ++i) gens.push_back(sparse_vector(rng, dim, 50));
    Subspace g = Subspace::span(gens, dim);
    if (g.dim() != m) return std::nullopt;
    ActionPointData d{f, g, true, m};
    if (!regular_audit(d)) return std::nullopt;
    return d;
}

}  // namespace

ActionPointData random_polysymplectic_action(Rng& rng, std::size_t dim_max, std::size_t k_max, bool adversarial) {
    // half the adversarial draws leave the standard model entirely
    if (adversarial && k_max >= 2 && dim_max >= 3 && uniform_int(rng, 0, 1) == 1) {
        for (;;)
            if (auto d = low_rank_action(rng, dim_max, k_max)) return *d;
    }
    for (;;) {
        std::size_t k = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(k_max)));
        long n_max = static_cast<long>(dim_max / (k + 1));
        if (n_max < 1) continue;
        std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, n_max));
        FormFamily f = standard_model(k, n, false);
        std::vector<std::size_t> axes(f.dim());
        for (std::size_t i = 0; i < axes.size(); ++i) axes[i] = i;
        // regularity needs k m <= dim; try a few draws before moving on
        std::size_t m_max = std::min(f.dim() / k, static_cast<std::size_t>(n + 1));
        for (int attempt = 0; attempt < 20; ++attempt) {
            std::size_t m = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(m_max)));
            ActionPointData d{f, draw_gtilde(rng, f.dim(), axes, m, adversarial), true, m};
            if (!regular_audit(d)) continue;
            Matrix a = random_invertible(rng, f.dim());
            return ActionPointData{change_basis(f, a), to_new_coordinates(d.gtilde, a), true, m};
        }
    }
}

ActionPointData random_polycosymplectic_action(Rng& rng, std::size_t dim_max, std::size_t k_min, std::size_t k_max,
                                               bool adversarial) {
    for (;;) {
        std::size_t k = static_cast<std::size_t>(uniform_int(rng, static_cast<long>(k_min), static_cast<long>(k_max)));
        long n_max = (static_cast<long>(dim_max) - static_cast<long>(k)) / static_cast<long>(k + 1);
        if (n_max < 1) continue;
        std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, n_max));
        FormFamily f = standard_model(k, n, true);
        StandardIndex ix{k, n, true};
        std::vector<std::size_t> axes;
        for (std::size_t i = ix.q(0); i < f.dim(); ++i) axes.push_back(i);
        std::size_t m = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n + 1)));
        Subspace g = m == 0 ? Subspace(f.dim()) : draw_gtilde(rng, f.dim(), axes, m, adversarial);
        Matrix a = random_invertible(rng, f.dim());
        ActionPointData d{change_basis(f, a), to_new_coordinates(g, a), true, m};
        d.regular = regular_audit(d);
        return d;
    }
}

CosymplecticFactor random_cosymplectic_factor(Rng& rng, std::size_t n_max) {
    std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(n_max)));
    FormFamily f = standard_model(1, n, true);
    std::vector<std::size_t> axes;
    for (std::size_t i = 1; i < f.dim(); ++i) axes.push_back(i);
    std::size_t m = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n)));
    Subspace g = m == 0 ? Subspace(f.dim()) : draw_gtilde(rng, f.dim(), axes, m, false);
    Matrix a = random_invertible(rng, f.dim());
    return {change_basis(f, a), to_new_coordinates(g, a)};
}

}  // namespace polyred

namespace polyred {

MultiPoly random_polynomial(Rng& rng, const std::vector<std::string>& vars, const std::vector<std::string>& support,
                            unsigned max_degree, std::size_t max_terms, long box) {
    MultiPoly p(vars);
    if (support.empty()) {
        p.add_term(Exponents(vars.size(), 0), uniform_int(rng, -box, box));
        return p;
    }
    std::size_t terms = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(max_terms)));
    for (std::size_t t = 0; t < terms; ++t) {
        Exponents e(vars.size(), 0);
        unsigned deg = static_cast<unsigned>(uniform_int(rng, 0, max_degree));
        for (unsigned d = 0; d < deg; ++d) {
            const auto& name = support[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(support.size()) - 1))];
            ++e[p.var_index(name)];
        }
        p.add_term(e, uniform_int(rng, -box, box));
    }
    return p;
}

}  // namespace polyred
