#include "polyred/builtin_examples.hpp"

#include <stdexcept>

namespace polyred {

bool ExampleBundle::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

std::vector<std::string> builtin_example_names() { return {"r6-cross", "r4-pullback", "stable-r3", "electrostatic-k2"}; }

namespace {

void check(ExampleBundle& b, std::string label, bool ok, std::string detail = {}) {
    b.checks.push_back({std::move(label), ok, std::move(detail)});
}

Matrix wedge(std::size_t n, std::size_t i, std::size_t j) {
    Matrix w(n, n);
    w(i, j) = 1;
    w(j, i) = -1;
    return w;
}

// R^3 x R^3 with omega^a read off the cross product of the second factors
// and eta^a the coordinates of the first factor
FormFamily cross_product_family() {
    std::vector<Matrix> omega = {wedge(6, 4, 5), wedge(6, 5, 3), wedge(6, 3, 4)};
    std::vector<Vec> eta = {unit_vector(6, 0), unit_vector(6, 1), unit_vector(6, 2)};
    return FormFamily(6, std::move(omega), std::move(eta));
}

ExampleBundle r6_cross() {
    ExampleBundle b;
    b.name = "r6-cross";
    b.description = "R^6 = R^3 x R^3 with the cross-product 3-polycosymplectic structure";
    FormFamily f = cross_product_family();
    b.forms = f;
    Subspace bold = Subspace::coordinate(6, {0, 1, 2});
    Subspace s = Subspace::coordinate(6, {3, 4});  // (0, e1), (0, e2)

    StructureKind kind = identify_structure(f);
    check(b, "structure is 3-polycosymplectic", kind.tag == StructureTag::Polycosymplectic && f.k() == 3);
    check(b, "joint omega-kernel = R^3 x 0", joint_kernel(f, false) == bold);

    ReebFrame frame = reeb_solve(f);
    bool frame_ok = true;
    for (std::size_t a = 0; a < 3; ++a) frame_ok = frame_ok && frame.reeb[a] == unit_vector(6, a);
    check(b, "Reeb vectors R_a = (e_a, 0)", frame_ok);
    check(b, "D = R^3 x 0", frame.span == bold);

    Subspace sc = poly_orthogonal(s, f);
    Subspace scc = poly_orthogonal(sc, f);
    Subspace s_cap = subspace_intersect(s, sc);
    check(b, "S^comega = R^3 x 0", sc == bold);
    check(b, "S^comega comega = Q^6", scc == Subspace::whole(6));
    check(b, "S ∩ S^comega = 0", s_cap.is_zero());

    // the same conclusion for another plane in the second factor
    Subspace s2 = Subspace::span({Vec{0, 0, 0, 1, 2, 0}, Vec{0, 0, 0, 0, 1, 3}}, 6);
    check(b, "S^comega = R^3 x 0 for another plane", poly_orthogonal(s2, f) == bold);

    ActionPointData d{f, s, true, 2};
    ConditionReport nd = check_condition(d, ConditionId::NondegPolyco);
    check(b, "D (+) (S ∩ S^comega) = S^comega ∩ S^comega comega", nd.holds && nd.direct_sum.value_or(false));

    LinearReduction red = linear_reduce(d);
    bool omega_zero = true;
    for (const auto& w : red.reduced.omega()) omega_zero = omega_zero && w.is_zero();
    check(b, "quotient has dimension 3", red.reduced.dim() == 3);
    check(b, "reduced omega_S^a = 0", omega_zero);
    check(b, "reduced eta_S has rank 3", rank(red.reduced.eta_matrix()) == 3);
    check(b, "reduced eta_S are the coordinate covectors", red.reduced.eta_matrix() == Matrix::identity(3));
    check(b, "reduced space is 3-polycosymplectic", red.reduced_kind.tag == StructureTag::Polycosymplectic);

    Subspace s_plus_d = subspace_sum(s, frame.span);
    check(b, "S ∩ D = 0, so S + D is direct", subspace_intersect(s, frame.span).is_zero());
    check(b, "S^comega comega != S (+) D", !(scc == s_plus_d), "dim S + D = " + std::to_string(s_plus_d.dim()));

    b.subspaces = {{"S", s}, {"D", frame.span}, {"S^comega", sc}, {"S^comega comega", scc},
                   {"S ∩ S^comega", s_cap}, {"S + D", s_plus_d}};
    return b;
}

ExampleBundle r4_pullback() {
    ExampleBundle b;
    b.name = "r4-pullback";
    b.description = "polysymplectic R^4 pulled back from two symplectic spaces, one map not onto";
    Matrix omega1 = wedge(4, 0, 1), omega2 = wedge(4, 2, 3);
    Matrix big_omega1 = wedge(4, 0, 1) + wedge(4, 2, 3);
    Matrix big_omega2 = wedge(2, 0, 1);
    Matrix pi1 = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
    Matrix pi2 = {{0, 0, 1, 0}, {0, 0, 0, 1}};
    FormFamily f(4, {omega1, omega2});
    b.forms = f;

    check(b, "Pi_1^* Omega_1 = omega^1", pi1.transpose() * big_omega1 * pi1 == omega1);
    check(b, "Pi_2^* Omega_2 = omega^2", pi2.transpose() * big_omega2 * pi2 == omega2);
    Subspace k1 = nullspace(pi1), k2 = nullspace(pi2);
    check(b, "ker Pi_1 ∩ ker Pi_2 = 0", subspace_intersect(k1, k2).is_zero());
    check(b, "Pi_1 is not surjective", rank(pi1) < pi1.rows(), "rank " + std::to_string(rank(pi1)));
    check(b, "Pi_2 is surjective", rank(pi2) == pi2.rows());
    check(b, "(omega^1, omega^2) is polysymplectic", identify_structure(f).tag == StructureTag::Polysymplectic);
    b.subspaces = {{"ker Pi_1", k1}, {"ker Pi_2", k2}};
    return b;
}

ExampleBundle stable_r3() {
    ExampleBundle b;
    b.name = "stable-r3";
    b.description = "R^3 with eta = dt, omega = dx ∧ dp and V = span{d/dp + t d/dx}";
    // coordinates (t, x, p)
    FormFamily f(3, {wedge(3, 1, 2)}, std::vector<Vec>{unit_vector(3, 0)});
    b.forms = f;
    check(b, "1-cosymplectic", identify_structure(f).tag == StructureTag::Polycosymplectic);

    bool pointwise = true;
    for (long t : {-2L, -1L, 0L, 1L, 2L}) {
        Subspace v = Subspace::span({Vec{0, t, 1}}, 3);
        pointwise = pointwise && distribution_checks(f, v).passes();
    }
    check(b, "k-cosymplectic linear axioms hold at sampled t", pointwise);

    Subspace v1 = Subspace::span({Vec{0, 1, 1}}, 3);
    LiftDistributionReport lifted = lift_distribution_check(f, v1);
    check(b, "lifted k-symplectic linear axioms hold at t = 1", lifted.lifted.passes());

    std::vector<std::string> vars = {"t", "x", "p"};
    Vec reeb = reeb_solve(f).reeb[0];
    PolyVectorField r, v;
    for (std::size_t i = 0; i < 3; ++i) r.push_back(MultiPoly::constant(vars, reeb[i]));
    v = {MultiPoly(vars), MultiPoly::variable(vars, "t"), MultiPoly::constant(vars, 1)};
    PolyVectorField br = lie_bracket(r, v);
    PolyVectorField dx = {MultiPoly(vars), MultiPoly::constant(vars, 1), MultiPoly(vars)};
    check(b, "[R, d/dp + t d/dx] = d/dx", br == dx);
    // d/dx has zero p-component, every nonzero element of V has p-component != 0
    bool outside = true;
    for (long t : {-2L, -1L, 0L, 1L, 2L}) {
        Vec at(3);
        for (std::size_t i = 0; i < 3; ++i) at[i] = br[i].evaluate({Rational(t), Rational(0), Rational(0)});
        outside = outside && !Subspace::span({Vec{0, t, 1}}, 3).contains(at);
    }
    check(b, "[R, V] is not contained in V", outside);
    b.values = {{"[R, V]", "(" + br[0].to_string() + ", " + br[1].to_string() + ", " + br[2].to_string() + ")"}};
    b.subspaces = {{"V at t = 1", v1}, {"W~ at t = 1", lifted.w_tilde}};
    return b;
}

}  // namespace

ElectrostaticData electrostatic_example() {
    auto vars = standard_variable_names(2, 1, true);  // t1 t2 q1 p1_1 p2_1
    std::vector<std::string> tv = {"t1", "t2"};
    ElectrostaticData e;
    e.h_corrected = parse_poly("-q1*t1*t2 + 1/2*p1_1^2 + 1/2*p2_1^2", vars);
    e.h_printed = parse_poly("q1*t1*t2 + 1/2*p1_1^2 + 1/2*p2_1^2", vars);
    e.section.k = 2;
    e.section.n = 1;
    e.section.psi = {parse_poly("1/6*t1^3*t2", tv)};
    e.section.psi_mom = {{parse_poly("1/2*t1^2*t2", tv)}, {parse_poly("1/6*t1^3", tv)}};
    auto c = [&](const std::string& s) { return parse_poly(s, vars); };
    e.x.legs = {{c("1"), c("0"), c("p1_1"), c("t1*t2"), c("1/2*t1^2")},
                {c("0"), c("1"), c("p2_1"), c("1/2*t1^2"), c("0")}};
    return e;
}

namespace {

ExampleBundle electrostatic() {
    ExampleBundle b;
    b.name = "electrostatic-k2";
    b.description = "two-parameter electrostatic field equations and the failure to lift the section";
    ElectrostaticData e = electrostatic_example();
    CoordinateModel m = standard_coordinates(2, 1, true);
    b.forms = m.forms;

    HddwResidual good = hddw_residual(e.h_corrected, e.section);
    HddwResidual bad = hddw_residual(e.h_printed, e.section);
    check(b, "section solves the field equations for H = -q t1 t2 + ...", good.all_zero());
    check(b, "section fails for H = +q t1 t2 + ...", !bad.all_zero(), "q-residual " + bad.q[0].to_string());
    check(b, "printed-sign q-residual is 2 t1 t2", bad.q[0] == parse_poly("2*t1*t2", {"t1", "t2"}));

    PolySection perturbed = e.section;
    perturbed.psi_mom[1][0] += MultiPoly::variable({"t1", "t2"}, "t2");
    HddwResidual pert = hddw_residual(e.h_corrected, perturbed);
    check(b, "perturbing psi_2 by t2 breaks the equations",
          !pert.all_zero() && pert.q[0] == MultiPoly::constant({"t1", "t2"}, 1) &&
              pert.p[1][0] == MultiPoly::variable({"t1", "t2"}, "t2"));

    auto obstruction = lifted_section_obstruction(e.h_corrected, e.section);
    MultiPoly expected = parse_poly("1/3*t1^3*t2", {"t1", "t2"});
    check(b, "mixed-partial mismatch for psi~ is t1^3 t2 / 3", obstruction[0][1] == expected,
          obstruction[0][1].to_string());

    check(b, "X solves (k-Cosym)", kvector_residual(m, e.h_corrected, e.x, KMode::KCosym).all_zero());
    LiftedDynamicsReport lifted = lift_dynamics_verify(m, e.h_corrected, e.x);
    auto lvars = lifted_coordinates(m).vars;
    check(b, "H~ = -q t1 t2 - 2 s + (p1^2 + p2^2)/2",
          lifted.h_tilde == parse_poly("-q1*t1*t2 - 2*s + 1/2*p1_1^2 + 1/2*p2_1^2", lvars));
    check(b, "lifted k-vector solves (k-Sym) for H~", lifted.holds);

    auto c = integrability_obstruction(m, e.h_corrected, e.x);
    // along the section the bracket coefficient is -t1^3 t2 / 3
    std::vector<std::string> tv = {"t1", "t2"};
    std::vector<MultiPoly> images = {MultiPoly::variable(tv, "t1"), MultiPoly::variable(tv, "t2"), e.section.psi[0],
                                     e.section.psi_mom[0][0], e.section.psi_mom[1][0]};
    MultiPoly along = c[0][1].compose(images);
    check(b, "bracket coefficient c_12 is nonzero along the section", !along.is_zero(), along.to_string());
    check(b, "c_12 along the section = -t1^3 t2 / 3", along == -expected);

    b.values = {{"H", e.h_corrected.to_string()},
                {"H (printed sign) q-residual", bad.q[0].to_string()},
                {"obstruction m_12", obstruction[0][1].to_string()},
                {"H~", lifted.h_tilde.to_string()},
                {"c_12", c[0][1].to_string()}};
    return b;
}

}  // namespace

ExampleBundle builtin_example(const std::string& name) {
    if (name == "r6-cross") return r6_cross();
    if (name == "r4-pullback") return r4_pullback();
    if (name == "stable-r3") return stable_r3();
    if (name == "electrostatic-k2") return electrostatic();
    throw std::invalid_argument("unknown example '" + name + "'");
}

}  // namespace polyred
