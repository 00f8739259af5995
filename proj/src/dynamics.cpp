#include "polyred/dynamics.hpp"

#include "polyred/lift.hpp"

#include <stdexcept>

namespace polyred {

namespace {

bool all_zero(const std::vector<MultiPoly>& ps) {
    for (const auto& p : ps)
        if (!p.is_zero()) return false;
    return true;
}

MultiPoly zero_on(const std::vector<std::string>& vars) { return MultiPoly(vars); }

MultiPoly constant_on(const std::vector<std::string>& vars, const Rational& c) {
    return MultiPoly::constant(vars, c);
}

void require_vars(const MultiPoly& h, const std::vector<std::string>& vars, const char* who) {
    if (h.vars() != vars) throw std::invalid_argument(std::string(who) + ": polynomial variables do not match model");
}

void require_shape(const PolyKVector& x, std::size_t k, std::size_t dim, const char* who) {
    if (x.legs.size() != k) throw std::invalid_argument(std::string(who) + ": k-vector has wrong number of legs");
    for (const auto& leg : x.legs)
        if (leg.size() != dim) throw std::invalid_argument(std::string(who) + ": leg has wrong component count");
}

}  // namespace

CoordinateModel standard_coordinates(std::size_t k, std::size_t n, bool cosymplectic) {
    return {standard_variable_names(k, n, cosymplectic), standard_model(k, n, cosymplectic)};
}

CoordinateModel lifted_coordinates(const CoordinateModel& m) {
    CoordinateModel l{m.vars, lift_structure(m.forms).lifted};
    l.vars.push_back("s");
    return l;
}

MultiPoly apply_field(const PolyVectorField& x, const MultiPoly& f) {
    if (x.size() != f.vars().size()) throw std::invalid_argument("apply_field: dimension mismatch");
    MultiPoly out(f.vars());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        MultiPoly d = f.derivative(i);
        if (!d.is_zero()) out += x[i] * d;
    }
    return out;
}

PolyVectorField lie_bracket(const PolyVectorField& x, const PolyVectorField& y) {
    if (x.size() != y.size()) throw std::invalid_argument("lie_bracket: fields have different dimensions");
    PolyVectorField out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].vars() != y[i].vars()) throw std::invalid_argument("lie_bracket: variable mismatch");
        out.push_back(apply_field(x, y[i]) - apply_field(y, x[i]));
    }
    return out;
}

bool HddwResidual::all_zero() const {
    if (!polyred::all_zero(q)) return false;
    for (const auto& row : p)
        if (!polyred::all_zero(row)) return false;
    return true;
}

namespace {

// images of the model coordinates under a section: t -> t, q -> psi, p -> psi_a
std::vector<MultiPoly> section_images(const PolySection& s, const std::vector<std::string>& tvars) {
    std::vector<MultiPoly> images;
    for (std::size_t a = 0; a < s.k; ++a) images.push_back(MultiPoly::variable(tvars, tvars[a]));
    for (std::size_t i = 0; i < s.n; ++i) images.push_back(s.psi.at(i));
    for (std::size_t a = 0; a < s.k; ++a)
        for (std::size_t i = 0; i < s.n; ++i) images.push_back(s.psi_mom.at(a).at(i));
    for (const auto& im : images)
        if (im.vars() != tvars) throw std::invalid_argument("section components must be polynomials in t1..tk");
    return images;
}

std::vector<std::string> t_names(std::size_t k) {
    std::vector<std::string> v;
    for (std::size_t a = 0; a < k; ++a) v.push_back("t" + std::to_string(a + 1));
    return v;
}

}  // namespace

HddwResidual hddw_residual(const MultiPoly& h, const PolySection& s) {
    StandardIndex ix{s.k, s.n, true};
    require_vars(h, standard_variable_names(s.k, s.n, true), "hddw_residual");
    auto tvars = t_names(s.k);
    auto images = section_images(s, tvars);
    HddwResidual r;
    for (std::size_t i = 0; i < s.n; ++i) {
        MultiPoly res = h.derivative(ix.q(i)).compose(images);
        for (std::size_t a = 0; a < s.k; ++a) res += s.psi_mom[a][i].derivative(a);
        r.q.push_back(std::move(res));
    }
    for (std::size_t a = 0; a < s.k; ++a) {
        std::vector<MultiPoly> row;
        for (std::size_t i = 0; i < s.n; ++i)
            row.push_back(h.derivative(ix.p(a, i)).compose(images) - s.psi[i].derivative(a));
        r.p.push_back(std::move(row));
    }
    return r;
}

bool KVectorResidual::all_zero() const { return polyred::all_zero(form) && polyred::all_zero(normalization); }

std::vector<MultiPoly> reeb_derivatives(const CoordinateModel& m, const MultiPoly& h) {
    require_vars(h, m.vars, "reeb_derivatives");
    ReebFrame frame = reeb_solve(m.forms);
    std::vector<MultiPoly> out;
    for (const auto& r : frame.reeb) {
        MultiPoly acc(m.vars);
        for (std::size_t i = 0; i < r.size(); ++i)
            if (!r[i].is_zero()) acc += r[i] * h.derivative(i);
        out.push_back(std::move(acc));
    }
    return out;
}

KVectorResidual kvector_residual(const CoordinateModel& m, const MultiPoly& h, const PolyKVector& x, KMode mode) {
    require_vars(h, m.vars, "kvector_residual");
    std::size_t dim = m.forms.dim(), k = m.forms.k();
    require_shape(x, k, dim, "kvector_residual");
    std::vector<MultiPoly> rh;
    if (mode == KMode::KCosym) rh = reeb_derivatives(m, h);
    KVectorResidual r;
    for (std::size_t j = 0; j < dim; ++j) {
        MultiPoly acc = -h.derivative(j);
        for (std::size_t a = 0; a < k; ++a) {
            const Matrix& w = m.forms.omega(a);
            for (std::size_t i = 0; i < dim; ++i)
                if (!w(i, j).is_zero() && !x.legs[a][i].is_zero()) acc += w(i, j) * x.legs[a][i];
            if (mode == KMode::KCosym && !m.forms.eta()[a][j].is_zero()) acc += m.forms.eta()[a][j] * rh[a];
        }
        r.form.push_back(std::move(acc));
    }
    if (mode == KMode::KCosym) {
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) {
                MultiPoly acc = constant_on(m.vars, a == b ? Rational(-1) : Rational(0));
                for (std::size_t i = 0; i < dim; ++i)
                    if (!m.forms.eta()[a][i].is_zero()) acc += m.forms.eta()[a][i] * x.legs[b][i];
                r.normalization.push_back(std::move(acc));
            }
    }
    return r;
}

PointSolution solve_hamiltonian_kvector(const FormFamily& f, const MultiPoly& h, const Vec& point, KMode mode) {
    std::size_t dim = f.dim(), k = f.k();
    if (h.vars().size() != dim || point.size() != dim)
        throw std::invalid_argument("solve_hamiltonian_kvector: Hamiltonian or point does not match the model");
    if (mode == KMode::KCosym && identify_structure(f).tag != StructureTag::Polycosymplectic)
        throw std::invalid_argument("solve_hamiltonian_kvector: (k-Cosym) needs a polycosymplectic family");

    Vec dh(dim);
    for (std::size_t j = 0; j < dim; ++j) dh[j] = h.derivative(j).evaluate(point);
    Vec rhs = dh;
    if (mode == KMode::KCosym) {
        ReebFrame frame = reeb_solve(f);
        for (std::size_t a = 0; a < k; ++a) {
            Rational rah = dot(frame.reeb[a], dh);
            rhs = axpy(-rah, f.eta()[a], rhs);
        }
    }
    // unknown index a*dim + i holds X_a^i
    std::size_t rows = dim + (mode == KMode::KCosym ? k * k : 0);
    Matrix sys(rows, k * dim);
    Vec b(rows);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t i = 0; i < dim; ++i) sys(j, a * dim + i) = f.omega(a)(i, j);
        b[j] = rhs[j];
    }
    if (mode == KMode::KCosym)
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t c = 0; c < k; ++c) {
                std::size_t row = dim + a * k + c;
                for (std::size_t i = 0; i < dim; ++i) sys(row, c * dim + i) = f.eta()[a][i];
                b[row] = a == c ? 1 : 0;
            }
    auto sol = solve_linear(sys, b);
    if (!sol) throw std::invalid_argument("solve_hamiltonian_kvector: the linear system is inconsistent");
    PointSolution out;
    out.freedom = sol->homogeneous.dim();
    for (std::size_t a = 0; a < k; ++a)
        out.legs.emplace_back(sol->particular.begin() + static_cast<long>(a * dim),
                              sol->particular.begin() + static_cast<long>((a + 1) * dim));
    out.verified = sys * sol->particular == b;
    return out;
}

PolyKVector darboux_kcosym_solution(std::size_t k, std::size_t n, const MultiPoly& h,
                                    const std::vector<std::vector<std::vector<MultiPoly>>>& free) {
    StandardIndex ix{k, n, true};
    auto vars = standard_variable_names(k, n, true);
    require_vars(h, vars, "darboux_kcosym_solution");
    PolyKVector x;
    x.legs.assign(k, PolyVectorField(ix.dim(), zero_on(vars)));
    for (std::size_t a = 0; a < k; ++a) {
        x.legs[a][ix.t(a)] = constant_on(vars, 1);
        for (std::size_t i = 0; i < n; ++i) x.legs[a][ix.q(i)] = h.derivative(ix.p(a, i));
        if (!free.empty())
            for (std::size_t b = 0; b < k; ++b)
                for (std::size_t i = 0; i < n; ++i)
                    if (a != 0 || b != 0) x.legs[a][ix.p(b, i)] = free.at(a).at(b).at(i);
    }
    for (std::size_t i = 0; i < n; ++i) {
        MultiPoly balance = -h.derivative(ix.q(i));
        for (std::size_t a = 1; a < k; ++a) balance -= x.legs[a][ix.p(a, i)];
        x.legs[0][ix.p(0, i)] = balance;
    }
    return x;
}

PolyKVector darboux_ksym_solution(std::size_t k, std::size_t n, const MultiPoly& h) {
    StandardIndex ix{k, n, false};
    auto vars = standard_variable_names(k, n, false);
    require_vars(h, vars, "darboux_ksym_solution");
    PolyKVector x;
    x.legs.assign(k, PolyVectorField(ix.dim(), zero_on(vars)));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t i = 0; i < n; ++i) x.legs[a][ix.q(i)] = h.derivative(ix.p(a, i));
    for (std::size_t i = 0; i < n; ++i) x.legs[0][ix.p(0, i)] = -h.derivative(ix.q(i));
    return x;
}

LiftedDynamicsReport lift_dynamics_verify(const CoordinateModel& m, const MultiPoly& h, const PolyKVector& x) {
    if (!kvector_residual(m, h, x, KMode::KCosym).all_zero())
        throw std::invalid_argument("lift_dynamics_verify: X does not solve (k-Cosym) for H");
    CoordinateModel l = lifted_coordinates(m);
    std::size_t k = m.forms.k();
    LiftedDynamicsReport r;
    r.h_tilde = h.rebase(l.vars) - Rational(static_cast<long>(k)) * MultiPoly::variable(l.vars, "s");
    auto rh = reeb_derivatives(m, h);
    for (std::size_t a = 0; a < k; ++a) {
        PolyVectorField leg;
        for (const auto& c : x.legs[a]) leg.push_back(c.rebase(l.vars));
        leg.push_back(rh[a].rebase(l.vars));
        r.x_tilde.legs.push_back(std::move(leg));
    }
    r.residual = kvector_residual(l, r.h_tilde, r.x_tilde, KMode::KSym);
    r.holds = r.residual.all_zero();
    return r;
}

std::vector<std::vector<MultiPoly>> integrability_obstruction(const CoordinateModel& m, const MultiPoly& h,
                                                              const PolyKVector& x) {
    std::size_t k = m.forms.k();
    require_shape(x, k, m.forms.dim(), "integrability_obstruction");
    auto rh = reeb_derivatives(m, h);
    std::vector<std::vector<MultiPoly>> c(k, std::vector<MultiPoly>(k, zero_on(m.vars)));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
            c[a][b] = apply_field(x.legs[a], rh[b]) - apply_field(x.legs[b], rh[a]);
            c[b][a] = -c[a][b];
        }
    return c;
}

std::vector<std::vector<MultiPoly>> lifted_section_obstruction(const MultiPoly& h, const PolySection& s) {
    require_vars(h, standard_variable_names(s.k, s.n, true), "lifted_section_obstruction");
    auto tvars = t_names(s.k);
    auto images = section_images(s, tvars);
    std::vector<MultiPoly> grad;
    for (std::size_t a = 0; a < s.k; ++a) grad.push_back(h.derivative(a).compose(images));
    std::vector<std::vector<MultiPoly>> m(s.k, std::vector<MultiPoly>(s.k, zero_on(tvars)));
    for (std::size_t a = 0; a < s.k; ++a)
        for (std::size_t b = 0; b < s.k; ++b)
            if (a != b) m[a][b] = grad[a].derivative(b) - grad[b].derivative(a);
    return m;
}

PolyVectorField cotangent_lift_field(std::size_t k, std::size_t n, const AffineGenerator& g) {
    StandardIndex ix{k, n, true};
    auto vars = standard_variable_names(k, n, true);
    PolyVectorField xi(ix.dim(), zero_on(vars));
    for (std::size_t i = 0; i < n; ++i) {
        MultiPoly c = constant_on(vars, g.b.at(i));
        for (std::size_t j = 0; j < n; ++j)
            if (!g.a(i, j).is_zero()) c += g.a(i, j) * MultiPoly::variable(vars, vars[ix.q(j)]);
        xi[ix.q(i)] = std::move(c);
    }
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t i = 0; i < n; ++i) {
            MultiPoly c = zero_on(vars);
            for (std::size_t j = 0; j < n; ++j)
                if (!g.a(j, i).is_zero()) c -= g.a(j, i) * MultiPoly::variable(vars, vars[ix.p(a, j)]);
            xi[ix.p(a, i)] = std::move(c);
        }
    return xi;
}

std::vector<MultiPoly> momentum_polynomials(std::size_t k, std::size_t n, const AffineGenerator& g) {
    StandardIndex ix{k, n, true};
    auto vars = standard_variable_names(k, n, true);
    PolyVectorField xi = cotangent_lift_field(k, n, g);
    std::vector<MultiPoly> j;
    for (std::size_t a = 0; a < k; ++a) {
        MultiPoly acc = zero_on(vars);
        for (std::size_t i = 0; i < n; ++i) acc += MultiPoly::variable(vars, vars[ix.p(a, i)]) * xi[ix.q(i)];
        j.push_back(std::move(acc));
    }
    return j;
}

MultiPoly noether_residual(const CoordinateModel& m, const MultiPoly& h, const PolyKVector& x,
                           const PolyVectorField& xi, const std::vector<MultiPoly>& j) {
    if (!apply_field(xi, h).is_zero()) throw std::invalid_argument("noether_residual: H is not invariant");
    if (!kvector_residual(m, h, x, KMode::KCosym).all_zero())
        throw std::invalid_argument("noether_residual: X does not solve (k-Cosym) for H");
    if (j.size() != m.forms.k()) throw std::invalid_argument("noether_residual: need k momentum components");
    MultiPoly acc = zero_on(m.vars);
    for (std::size_t a = 0; a < j.size(); ++a) acc += apply_field(x.legs[a], j[a]);
    return acc;
}

TranslationReport translation_reduce_verify(const MultiPoly& h, const PolyKVector& x, std::size_t k, std::size_t n,
                                            const std::vector<Rational>& mu) {
    if (n == 0) throw std::invalid_argument("translation_reduce_verify: need n >= 1");
    if (mu.size() != k) throw std::invalid_argument("translation_reduce_verify: mu needs k entries");
    CoordinateModel m = standard_coordinates(k, n, true);
    StandardIndex ix{k, n, true};
    require_vars(h, m.vars, "translation_reduce_verify");
    const std::string& q1 = m.vars[ix.q(0)];
    if (!h.independent_of(q1)) throw std::invalid_argument("translation_reduce_verify: H depends on q1");
    if (!kvector_residual(m, h, x, KMode::KCosym).all_zero())
        throw std::invalid_argument("translation_reduce_verify: X does not solve (k-Cosym) for H");
    for (const auto& leg : x.legs)
        for (const auto& c : leg)
            if (!c.independent_of(q1))
                throw std::invalid_argument("translation_reduce_verify: X is not invariant under q1-translation");
    for (const auto& leg : x.legs)
        for (std::size_t b = 0; b < k; ++b) {
            MultiPoly c = leg[ix.p(b, 0)];
            for (std::size_t a = 0; a < k; ++a) c = c.substitute(m.vars[ix.p(a, 0)], mu[a]);
            if (!c.is_zero()) throw std::invalid_argument("translation_reduce_verify: X is not tangent to the level set");
        }

    TranslationReport r;
    r.reduced_n = n - 1;
    CoordinateModel red = standard_coordinates(k, n - 1, true);
    StandardIndex rx{k, n - 1, true};
    // images of the old coordinates on the reduced level set
    std::vector<MultiPoly> images(ix.dim(), zero_on(red.vars));
    std::vector<std::size_t> kept;  // old index of each reduced coordinate
    for (std::size_t a = 0; a < k; ++a) images[ix.t(a)] = MultiPoly::variable(red.vars, red.vars[rx.t(a)]);
    for (std::size_t i = 1; i < n; ++i) images[ix.q(i)] = MultiPoly::variable(red.vars, red.vars[rx.q(i - 1)]);
    for (std::size_t a = 0; a < k; ++a) {
        images[ix.p(a, 0)] = constant_on(red.vars, mu[a]);
        for (std::size_t i = 1; i < n; ++i)
            images[ix.p(a, i)] = MultiPoly::variable(red.vars, red.vars[rx.p(a, i - 1)]);
    }
    for (std::size_t a = 0; a < k; ++a) kept.push_back(ix.t(a));
    for (std::size_t i = 1; i < n; ++i) kept.push_back(ix.q(i));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t i = 1; i < n; ++i) kept.push_back(ix.p(a, i));

    r.h_mu = h.compose(images);
    for (const auto& leg : x.legs) {
        PolyVectorField p;
        for (auto old : kept) p.push_back(leg[old].compose(images));
        r.projected.legs.push_back(std::move(p));
    }
    r.residual = kvector_residual(red, r.h_mu, r.projected, KMode::KCosym);
    r.holds = r.residual.all_zero();
    return r;
}

}  // namespace polyred
