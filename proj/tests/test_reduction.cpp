#include "oracle.hpp"
#include "polyred/random_instances.hpp"
#include "polyred/reduction.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace polyred;

namespace {

// k = 2, n = 2 polysymplectic model, coordinates q1 q2 p1_1 p1_2 p2_1 p2_2
ActionPointData pinned_counterexample() {
    Subspace g = Subspace::span({Vec{1, 0, 0, -2, 0, 1}, Vec{0, 0, 1, Rational(-3, 2), -1, 1}}, 6);
    return ActionPointData{standard_model(2, 2, false), g, true, 2};
}

}  // namespace

TEST_CASE("translation action on the standard k = 2 model") {
    ActionPointData d{standard_model(2, 2, false), Subspace::coordinate(6, {0}), true, 1};
    DerivedGeometry g = derive_geometry(d);
    // T is cut out by p1_1 = p2_1 = const
    CHECK(g.level_tangent == Subspace::coordinate(6, {0, 1, 3, 5}));
    CHECK(g.isotropy == d.gtilde);
    for (auto id : {ConditionId::NondegPolysym, ConditionId::A1, ConditionId::A2}) CHECK(check_condition(d, id).holds);

    DimensionReport dims = dimension_check(d, 1);
    CHECK(dims.formula_dim == 3);  // 6 - 2*1 - 1
    CHECK(dims.reduced_dim == 3);
    CHECK(dims.formula_ok);
    CHECK(dims.regularity_consistent);

    LinearReduction r = linear_reduce(d);
    CHECK(r.reduced.dim() == 3);
    CHECK(r.reduced_kind.tag == StructureTag::Polysymplectic);
    CHECK(r.verdicts_match());
}

TEST_CASE("dependent momentum constraints are flagged") {
    // d/dp2_1 lies in ker omega^1, so only one constraint survives
    ActionPointData d{standard_model(2, 2, false), Subspace::coordinate(6, {4}), true, 1};
    CHECK_FALSE(regular_audit(d));
    DimensionReport dims = dimension_check(d, 1);
    CHECK_FALSE(dims.regularity_consistent);
    CHECK(dims.codim_t == 1);
}

TEST_CASE("pinned instance: A2 holds while nondegeneracy fails") {
    ActionPointData d = pinned_counterexample();
    CHECK(regular_audit(d));
    DerivedGeometry g = derive_geometry(d);
    CHECK(g.level_tangent == Subspace::coordinate(6, {3, 5}));
    CHECK(g.isotropy.is_zero());
    CHECK(check_condition(d, ConditionId::A2).holds);
    ConditionReport nd = check_condition(d, ConditionId::NondegPolysym);
    CHECK_FALSE(nd.holds);
    CHECK(nd.lhs.is_zero());
    CHECK(nd.rhs == Subspace::coordinate(6, {3, 5}));
    CHECK_FALSE(check_condition(d, ConditionId::A1).holds);
    LinearReduction r = linear_reduce(d);
    CHECK(r.reduced_kind.tag == StructureTag::Invalid);
    CHECK(r.verdicts_match());
}

TEST_CASE("action data validation") {
    FormFamily c = standard_model(1, 1, true);
    ActionPointData bad{c, Subspace::coordinate(3, {0}), true, 1};  // along the Reeb direction
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    ActionPointData wrong_dim{c, Subspace::coordinate(4, {1}), true, 1};
    CHECK_THROWS_AS(wrong_dim.validate(), std::invalid_argument);
    CHECK_THROWS_AS(parse_condition("A3"), std::invalid_argument);
    CHECK(parse_condition("C1") == ConditionId::C1);
}

TEST_CASE("property: isotropy sits inside both orthogonals") {
    Rng rng(404);
    for (int trial = 0; trial < 200; ++trial) {
        ActionPointData d = random_polysymplectic_action(rng, 10, 3, trial % 2 == 0);
        DerivedGeometry g = derive_geometry(d);
        Subspace go = poly_orthogonal(d.gtilde, d.forms);
        CHECK(go.contains(g.isotropy));
        CHECK(poly_orthogonal(go, d.forms).contains(g.isotropy));
        CHECK(go == g.level_tangent);
    }
}

TEST_CASE("property: kernel of the restricted form is ker + isotropy") {
    Rng rng(808);
    for (int trial = 0; trial < 200; ++trial) {
        PresymplecticSample p = random_presymplectic(rng, 8, trial % 2 == 0);
        std::vector<Vec> g;
        for (long i = 0; i < uniform_int(rng, 1, 3); ++i) g.push_back(sparse_vector(rng, p.forms.dim(), 40));
        ActionPointData d{p.forms, Subspace::span(g, p.forms.dim()), true, std::nullopt};
        DerivedGeometry geo = derive_geometry(d);
        const Subspace& t = geo.level_tangent;
        Subspace restricted_kernel = subspace_intersect(t, poly_orthogonal(t, p.forms));
        CHECK(restricted_kernel == subspace_sum(form_kernel(p.forms.omega(0)), geo.isotropy));
    }
}

TEST_CASE("property: reduced structure is valid exactly when the condition holds") {
    Rng rng(99);
    int sym_fail = 0, co_fail = 0;
    for (int trial = 0; trial < 200; ++trial) {
        ActionPointData s = random_polysymplectic_action(rng, 9, 3, trial % 2 == 0);
        LinearReduction rs = linear_reduce(s);
        CHECK(rs.verdicts_match());
        sym_fail += !rs.condition_holds;
        ActionPointData c = random_polycosymplectic_action(rng, 9, 1, 3, trial % 2 == 0);
        LinearReduction rc = linear_reduce(c);
        CHECK(rc.verdicts_match());
        co_fail += !rc.condition_holds;
    }
    // both directions get exercised
    CHECK(sym_fail > 0);
    CHECK(co_fail > 0);
}

TEST_CASE("property: k = 1 cosymplectic data always reduces") {
    Rng rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        ActionPointData d = random_polycosymplectic_action(rng, 9, 1, 1, trial % 2 == 0);
        CHECK(check_condition(d, ConditionId::NondegPolyco).holds);
        CHECK(check_condition(d, ConditionId::AlbertK1).holds);
        CHECK(linear_reduce(d).reduced_kind.tag == StructureTag::Polycosymplectic);
    }
}

TEST_CASE("property: A1 and A2 together force nondegeneracy") {
    // the direction the redundancy claim does not touch
    Rng rng(55);
    for (int trial = 0; trial < 300; ++trial) {
        ActionPointData d = random_polysymplectic_action(rng, 10, 3, true);
        if (check_condition(d, ConditionId::A1).holds && check_condition(d, ConditionId::A2).holds)
            CHECK(check_condition(d, ConditionId::NondegPolysym).holds);
    }
}

TEST_CASE("generators keep their contracts") {
    Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        ActionPointData s = random_polysymplectic_action(rng, 12, 3, trial % 2 == 0);
        CHECK(identify_structure(s.forms).tag == StructureTag::Polysymplectic);
        CHECK(regular_audit(s));
        CHECK(s.gtilde.dim() == s.g_dim.value());
        ActionPointData c = random_polycosymplectic_action(rng, 12, 1, 3, trial % 2 == 0);
        CHECK(identify_structure(c.forms).tag == StructureTag::Polycosymplectic);
        CHECK_NOTHROW(c.validate());
    }
}
