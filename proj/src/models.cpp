#include "polyred/models.hpp"

#include <stdexcept>

namespace polyred {

FormFamily standard_model(std::size_t k, std::size_t n, bool cosymplectic) {
    if (k == 0) throw std::invalid_argument("standard_model: k must be at least 1");
    StandardIndex ix{k, n, cosymplectic};
    std::size_t dim = ix.dim();
    std::vector<Matrix> omega;
    for (std::size_t a = 0; a < k; ++a) {
        Matrix w(dim, dim);
        for (std::size_t i = 0; i < n; ++i) {
            w(ix.q(i), ix.p(a, i)) = 1;
            w(ix.p(a, i), ix.q(i)) = -1;
        }
        omega.push_back(std::move(w));
    }
    if (!cosymplectic) return FormFamily(dim, std::move(omega));
    std::vector<Vec> eta;
    for (std::size_t a = 0; a < k; ++a) eta.push_back(unit_vector(dim, ix.t(a)));
    return FormFamily(dim, std::move(omega), std::move(eta));
}

std::vector<std::string> standard_variable_names(std::size_t k, std::size_t n, bool cosymplectic) {
    std::vector<std::string> names;
    if (cosymplectic)
        for (std::size_t a = 0; a < k; ++a) names.push_back("t" + std::to_string(a + 1));
    for (std::size_t i = 0; i < n; ++i) names.push_back("q" + std::to_string(i + 1));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(a + 1) + "_" + std::to_string(i + 1));
    return names;
}

Subspace vertical_distribution(std::size_t k, std::size_t n, bool cosymplectic) {
    StandardIndex ix{k, n, cosymplectic};
    std::vector<std::size_t> axes;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t i = 0; i < n; ++i) axes.push_back(ix.p(a, i));
    return Subspace::coordinate(ix.dim(), axes);
}

FormFamily product_cosymplectic(const std::vector<FormFamily>& factors) {
    if (factors.empty()) throw std::invalid_argument("product_cosymplectic: no factors");
    std::size_t dim = 0;
    for (std::size_t a = 0; a < factors.size(); ++a) {
        const auto& f = factors[a];
        if (f.k() != 1 || identify_structure(f).tag != StructureTag::Polycosymplectic)
            throw std::invalid_argument("product_cosymplectic: factor " + std::to_string(a + 1) +
                                        " is not cosymplectic");
        dim += f.dim();
    }
    std::vector<Matrix> omega;
    std::vector<Vec> eta;
    std::size_t offset = 0;
    for (const auto& f : factors) {
        Matrix w(dim, dim);
        Vec e(dim);
        for (std::size_t i = 0; i < f.dim(); ++i) {
            for (std::size_t j = 0; j < f.dim(); ++j) w(offset + i, offset + j) = f.omega(0)(i, j);
            e[offset + i] = f.eta()[0][i];
        }
        omega.push_back(std::move(w));
        eta.push_back(std::move(e));
        offset += f.dim();
    }
    FormFamily product(dim, std::move(omega), std::move(eta));

    // the Reeb frame of the product is the blockwise one
    ReebFrame frame = reeb_solve(product);
    offset = 0;
    for (std::size_t a = 0; a < factors.size(); ++a) {
        Vec expected(dim);
        Vec r = reeb_solve(factors[a]).reeb[0];
        for (std::size_t i = 0; i < r.size(); ++i) expected[offset + i] = r[i];
        if (frame.reeb[a] != expected) throw std::logic_error("product_cosymplectic: Reeb frame is not blockwise");
        offset += factors[a].dim();
    }
    return product;
}

CotangentData cotangent_momentum_data(const std::vector<AffineGenerator>& generators, const Vec& q, std::size_t k,
                                      const std::vector<Vec>& momenta, const Vec& t) {
    std::size_t n = q.size();
    if (momenta.size() != k) throw std::invalid_argument("cotangent_momentum_data: need k momentum vectors");
    if (!t.empty() && t.size() != k) throw std::invalid_argument("cotangent_momentum_data: t has wrong length");
    StandardIndex ix{k, n, true};
    CotangentData c;
    c.q = q;
    c.momenta = momenta;
    std::vector<Vec> base_fields;
    for (const auto& g : generators) {
        if (g.a.rows() != n || g.a.cols() != n || g.b.size() != n)
            throw std::invalid_argument("cotangent_momentum_data: generator has wrong shape");
        Vec x = axpy(1, g.a * q, g.b);
        Vec lifted(ix.dim());
        for (std::size_t i = 0; i < n; ++i) lifted[ix.q(i)] = x[i];
        std::vector<Rational> j;
        for (std::size_t a = 0; a < k; ++a) {
            if (momenta[a].size() != n) throw std::invalid_argument("cotangent_momentum_data: momentum length");
            Vec y = vec_times(momenta[a], g.a);  // (A^T p^a)^T
            for (std::size_t i = 0; i < n; ++i) lifted[ix.p(a, i)] = -y[i];
            j.push_back(dot(momenta[a], x));
        }
        base_fields.push_back(x);
        c.lifted_generators.push_back(std::move(lifted));
        c.j.push_back(std::move(j));
    }
    if (Subspace::span(base_fields, n).dim() != generators.size())
        throw std::invalid_argument("cotangent_momentum_data: generators are dependent (or vanish) at q");
    c.data = ActionPointData{standard_model(k, n, true), Subspace::span(c.lifted_generators, ix.dim()), true,
                             generators.size()};
    return c;
}

bool momentum_relation_holds(const CotangentData& c, const std::vector<AffineGenerator>& generators) {
    const FormFamily& f = c.data.forms;
    std::size_t k = f.k(), n = c.q.size();
    StandardIndex ix{k, n, true};
    for (std::size_t g = 0; g < generators.size(); ++g) {
        const auto& gen = generators[g];
        Vec x = axpy(1, gen.a * c.q, gen.b);
        for (std::size_t a = 0; a < k; ++a) {
            Vec contraction = vec_times(c.lifted_generators[g], f.omega(a));
            // differential of J^a = p^a . (A q + b) at the point
            Vec dj(ix.dim());
            Vec atp = vec_times(c.momenta[a], gen.a);
            for (std::size_t i = 0; i < n; ++i) {
                dj[ix.p(a, i)] = x[i];
                dj[ix.q(i)] = atp[i];
            }
            if (contraction != dj) return false;
        }
    }
    return true;
}

}  // namespace polyred
