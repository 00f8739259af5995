#include "polyred/builtin_examples.hpp"
#include "polyred/random_instances.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace polyred;

namespace {

PolyVectorField field(const std::vector<std::string>& vars, std::vector<std::string> comps) {
    PolyVectorField f;
    for (const auto& c : comps) f.push_back(parse_poly(c, vars));
    return f;
}

}  // namespace

TEST_CASE("the bracket that breaks involutivity") {
    std::vector<std::string> vars = {"t", "x", "p"};
    PolyVectorField dt = field(vars, {"1", "0", "0"});
    PolyVectorField v = field(vars, {"0", "t", "1"});
    CHECK(lie_bracket(dt, v) == field(vars, {"0", "1", "0"}));
    CHECK(lie_bracket(v, v) == field(vars, {"0", "0", "0"}));
}

TEST_CASE("electrostatic section: both signs of the Hamiltonian") {
    ElectrostaticData e = electrostatic_example();
    std::vector<std::string> t = {"t1", "t2"};
    CHECK(e.section.psi[0] == parse_poly("1/6*t1^3*t2", t));

    HddwResidual good = hddw_residual(e.h_corrected, e.section);
    CHECK(good.all_zero());

    HddwResidual bad = hddw_residual(e.h_printed, e.section);
    CHECK_FALSE(bad.all_zero());
    // the coupling term enters twice over: once from H and once missing from the section
    CHECK(bad.q[0] == parse_poly("2*t1*t2", t));
}

TEST_CASE("electrostatic section does not lift") {
    ElectrostaticData e = electrostatic_example();
    std::vector<std::string> t = {"t1", "t2"};
    auto m = lifted_section_obstruction(e.h_corrected, e.section);
    // by hand: A_1 = -t1^3 t2^2 / 6, A_2 = -t1^4 t2 / 6, m = dA_1/dt2 - dA_2/dt1
    CHECK(m[0][1] == parse_poly("1/3*t1^3*t2", t));
    CHECK(m[1][0] == parse_poly("-1/3*t1^3*t2", t));
    CHECK(m[0][0].is_zero());

    CoordinateModel model = standard_coordinates(2, 1, true);
    CHECK(kvector_residual(model, e.h_corrected, e.x, KMode::KCosym).all_zero());
    auto c = integrability_obstruction(model, e.h_corrected, e.x);
    CHECK(c[0][1] == -c[1][0]);
    CHECK_FALSE(c[0][1].is_zero());
}

TEST_CASE("pointwise solve: freedom counts on small models") {
    // one symplectic plane: X is determined
    FormFamily s = standard_model(1, 1, false);
    MultiPoly h = parse_poly("1/2*p1_1^2 + q1^2", {"q1", "p1_1"});
    PointSolution one = solve_hamiltonian_kvector(s, h, Vec{1, 2}, KMode::KSym);
    CHECK(one.verified);
    CHECK(one.freedom == 0);
    CHECK(one.legs[0] == Vec{2, -2});

    // k = 2, n = 1: six unknowns, three independent equations
    FormFamily s2 = standard_model(2, 1, false);
    MultiPoly h2 = parse_poly("q1*p1_1 + p2_1^2", {"q1", "p1_1", "p2_1"});
    PointSolution two = solve_hamiltonian_kvector(s2, h2, Vec{1, 1, 1}, KMode::KSym);
    CHECK(two.verified);
    CHECK(two.freedom == 3);
}

TEST_CASE("property: Darboux solutions solve their equations") {
    Rng rng(321);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t k = static_cast<std::size_t>(uniform_int(rng, 1, 3));
        std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 2));
        CoordinateModel cm = standard_coordinates(k, n, true);
        MultiPoly h = random_polynomial(rng, cm.vars, cm.vars, 3, 5, 3);
        PolyKVector x = darboux_kcosym_solution(k, n, h);
        CHECK(kvector_residual(cm, h, x, KMode::KCosym).all_zero());
        // lifted identity
        CHECK(lift_dynamics_verify(cm, h, x).holds);

        CoordinateModel sm = standard_coordinates(k, n, false);
        MultiPoly hs = random_polynomial(rng, sm.vars, sm.vars, 3, 5, 3);
        CHECK(kvector_residual(sm, hs, darboux_ksym_solution(k, n, hs), KMode::KSym).all_zero());
    }
}

TEST_CASE("property: obstruction vanishes for autonomous Hamiltonians") {
    Rng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t k = static_cast<std::size_t>(uniform_int(rng, 1, 3));
        std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 2));
        CoordinateModel cm = standard_coordinates(k, n, true);
        std::vector<std::string> support(cm.vars.begin() + static_cast<long>(k), cm.vars.end());
        MultiPoly h = random_polynomial(rng, cm.vars, support, 3, 5, 3);
        auto c = integrability_obstruction(cm, h, darboux_kcosym_solution(k, n, h));
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) CHECK(c[a][b].is_zero());
        for (const auto& r : reeb_derivatives(cm, h)) CHECK(r.is_zero());
    }
}

TEST_CASE("a wrong k-vector leaves a residual") {
    CoordinateModel cm = standard_coordinates(1, 1, true);
    MultiPoly h = parse_poly("1/2*p1_1^2", cm.vars);
    PolyKVector x = darboux_kcosym_solution(1, 1, h);
    x.legs[0][1] = x.legs[0][1] + MultiPoly::constant(cm.vars, 1);
    CHECK_FALSE(kvector_residual(cm, h, x, KMode::KCosym).all_zero());
    CHECK_THROWS_AS(lift_dynamics_verify(cm, h, x), std::invalid_argument);
}

TEST_CASE("Noether residual for translations") {
    CoordinateModel cm = standard_coordinates(2, 2, true);
    MultiPoly h = parse_poly("p1_1*p2_2 + q2^2*t1 + p1_2^2", cm.vars);
    PolyKVector x = darboux_kcosym_solution(2, 2, h);
    AffineGenerator g{Matrix(2, 2), unit_vector(2, 0)};
    MultiPoly r = noether_residual(cm, h, x, cotangent_lift_field(2, 2, g), momentum_polynomials(2, 2, g));
    CHECK(r.is_zero());
    // q1 enters H, so the translation is not a symmetry
    MultiPoly h_bad = h + parse_poly("q1", cm.vars);
    CHECK_THROWS_AS(noether_residual(cm, h_bad, darboux_kcosym_solution(2, 2, h_bad), cotangent_lift_field(2, 2, g),
                                     momentum_polynomials(2, 2, g)),
                    std::invalid_argument);
}

TEST_CASE("translation reduction in a small model") {
    CoordinateModel cm = standard_coordinates(1, 2, true);
    MultiPoly h = parse_poly("1/2*p1_1^2 + 1/2*p1_2^2 + q2^2", cm.vars);
    PolyKVector x = darboux_kcosym_solution(1, 2, h);
    TranslationReport r = translation_reduce_verify(h, x, 1, 2, {Rational(3)});
    CHECK(r.holds);
    CHECK(r.reduced_n == 1);
    CHECK(r.h_mu == parse_poly("1/2*p1_1^2 + q1^2 + 9/2", r.h_mu.vars()));
    CHECK(r.h_mu.vars() == standard_variable_names(1, 1, true));
    MultiPoly h_bad = h + parse_poly("q1", cm.vars);
    CHECK_THROWS_AS(translation_reduce_verify(h_bad, darboux_kcosym_solution(1, 2, h_bad), 1, 2, {Rational(3)}),
                    std::invalid_argument);
}
