// Acceptance runner: one PASS/FAIL line per criterion. `--only N` runs a
// single criterion; the exit code is nonzero when any selected one fails.

#include "polyred/campaign.hpp"
#include "polyred/serialize.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

using namespace polyred;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double elapsed(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string bundle_failures(const ExampleBundle& b) {
    std::string s;
    for (const auto& c : b.checks)
        if (!c.passed) s += " [" + c.label + "]";
    return s;
}

// omega^a(v, w) is the a-th component of the cross product of the second
// halves; eta^a reads the a-th coordinate of the first half
FormFamily cross_family_from_definition() {
    auto cross = [](const Vec& v, const Vec& w) {
        return Vec{v[4] * w[5] - v[5] * w[4], v[5] * w[3] - v[3] * w[5], v[3] * w[4] - v[4] * w[3]};
    };
    std::vector<Matrix> omega(3, Matrix(6, 6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            Vec c = cross(unit_vector(6, i), unit_vector(6, j));
            for (std::size_t a = 0; a < 3; ++a) omega[a](i, j) = c[a];
        }
    return FormFamily(6, omega, std::vector<Vec>{unit_vector(6, 0), unit_vector(6, 1), unit_vector(6, 2)});
}

Outcome criterion1() {
    ExampleBundle b = builtin_example("r6-cross");
    FormFamily f = cross_family_from_definition();
    Subspace bold = Subspace::coordinate(6, {0, 1, 2});
    Subspace s = Subspace::span({Vec{0, 0, 0, 1, 0, 0}, Vec{0, 0, 0, 0, 1, 0}}, 6);
    Subspace d = reeb_solve(f).span;
    Subspace sc = poly_orthogonal(s, f);
    Subspace scc = poly_orthogonal(sc, f);
    ActionPointData data{f, s, true, 2};
    ConditionReport nd = check_condition(data, ConditionId::NondegPolyco);
    LinearReduction red = linear_reduce(data);
    bool omega_zero = true;
    for (const auto& w : red.reduced.omega()) omega_zero = omega_zero && w.is_zero();
    std::vector<std::pair<std::string, bool>> facts = {
        {"forms match the bundle", b.forms && *b.forms == f},
        {"D", d == bold},
        {"S^comega", sc == bold},
        {"S^comega comega", scc == Subspace::whole(6)},
        {"S cap S^comega", subspace_intersect(s, sc).is_zero()},
        {"direct-sum condition", nd.holds && nd.direct_sum.value_or(false)},
        {"reduced omega zero", omega_zero},
        {"reduced eta rank 3", rank(red.reduced.eta_matrix()) == 3},
        {"reduced is 3-polycosymplectic", red.reduced_kind.tag == StructureTag::Polycosymplectic},
        {"S^comega comega != S + D", !(scc == subspace_sum(s, d))},
        {"bundle audit", b.all_passed()},
    };
    Outcome o{true, {}};
    for (const auto& [label, ok] : facts)
        if (!ok) {
            o.pass = false;
            o.detail += " [" + label + "]";
        }
    if (o.pass) o.detail = std::to_string(facts.size()) + " exact facts";
    o.detail += bundle_failures(b);
    return o;
}

Outcome criterion2() {
    ExampleBundle b = builtin_example("r4-pullback");
    // pullbacks entry by entry: (Pi^* Omega)(e_i, e_j) = Omega(Pi e_i, Pi e_j)
    auto pull = [](const Matrix& pi, const Matrix& big) {
        Matrix out(pi.cols(), pi.cols());
        for (std::size_t i = 0; i < pi.cols(); ++i)
            for (std::size_t j = 0; j < pi.cols(); ++j) out(i, j) = bilinear(big, pi.col(i), pi.col(j));
        return out;
    };
    Matrix big1{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
    Matrix big2{{0, 1}, {-1, 0}};
    Matrix pi1{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
    Matrix pi2{{0, 0, 1, 0}, {0, 0, 0, 1}};
    Matrix w1 = pull(pi1, big1), w2 = pull(pi2, big2);
    Matrix e12{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
    Matrix e34{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
    bool ok = w1 == e12 && w2 == e34 && subspace_intersect(nullspace(pi1), nullspace(pi2)).is_zero() &&
              rank(pi1) < 4 && identify_structure(FormFamily(4, {w1, w2})).tag == StructureTag::Polysymplectic &&
              b.forms && *b.forms == FormFamily(4, {w1, w2}) && b.all_passed();
    return {ok, ok ? "pullbacks, kernels, rank(Pi_1) = 2" : "mismatch" + bundle_failures(b)};
}

CampaignReport campaign(PropertyId p, std::size_t trials, std::size_t dim_max, std::size_t k_max,
                        Rational fraction = Rational(1, 4)) {
    CampaignConfig c;
    c.property = p;
    c.trials = trials;
    c.master_seed = 20240601;
    c.dim_max = dim_max;
    c.k_max = k_max;
    c.adversarial_fraction = fraction;
    return run_campaign(c);
}

std::string counts(const CampaignReport& r) {
    return std::to_string(r.passed) + "/" + std::to_string(r.trials.size());
}

Outcome criterion3() {
    CampaignReport r = campaign(PropertyId::PresymDoubleOrtho, 1000, 10, 1);
    return {r.property_holds && r.passed == 1000 && r.seconds < 30, counts(r)};
}

Outcome criterion4() {
    CampaignReport r = campaign(PropertyId::A2ImpliesNondeg, 1000, 12, 3);
    const json& a = r.aggregates;
    std::size_t violations = a["violations_a2_without_nondeg"].get<std::size_t>();
    std::size_t exhibits = a["exhibits_nondeg_without_a1"].get<std::size_t>();
    std::ostringstream d;
    d << "A2 held in " << a["a2_holds"].get<std::size_t>() << ", nondegeneracy failed in " << violations
      << " of those; " << exhibits << " nondegenerate instances fail A1";
    if (violations > 0) {
        const TrialOutcome* first = nullptr;
        for (const auto& t : r.trials)
            if (!t.passed) {
                first = &t;
                break;
            }
        if (first) d << "; first violation: trial " << first->index << " seed " << first->seed;
    }
    return {violations == 0 && exhibits >= 1 && r.seconds < 60, d.str()};
}

Outcome criterion5() {
    auto start = std::chrono::steady_clock::now();
    CampaignReport iff = campaign(PropertyId::LiftIff, 1000, 12, 3);
    CampaignReport lemma = campaign(PropertyId::LiftIdentities, 1000, 12, 3);
    CampaignReport eq = campaign(PropertyId::ReductionEquivalence, 1000, 12, 3);
    bool ok = iff.property_holds && lemma.property_holds && eq.property_holds && elapsed(start) < 90;
    std::string d = "iff " + counts(iff) + ", identities " + counts(lemma) + ", verdicts " + counts(eq) +
                    "; planted-degenerate bases " + iff.aggregates["adversarial_trials"].dump() +
                    ", non-reducible bases " + eq.aggregates["base_nondeg_false"].dump();
    return {ok, d};
}

Outcome criterion6() {
    CampaignReport r = campaign(PropertyId::AlbertK1, 1000, 12, 1);
    return {r.property_holds && r.passed == 1000 && r.seconds < 30, counts(r)};
}

Outcome criterion7() {
    ElectrostaticData e = electrostatic_example();
    std::vector<std::string> t = {"t1", "t2"};
    HddwResidual good = hddw_residual(e.h_corrected, e.section);
    HddwResidual bad = hddw_residual(e.h_printed, e.section);
    auto m = lifted_section_obstruction(e.h_corrected, e.section);
    MultiPoly expected = parse_poly("1/3*t1^3*t2", t);
    bool ok = good.all_zero() && !bad.all_zero() && m[0][1] == expected && m[1][0] == -expected &&
              builtin_example("electrostatic-k2").all_passed();
    return {ok, "obstruction " + m[0][1].to_string() + ", printed-sign q residual " + bad.q[0].to_string()};
}

Outcome criterion8() {
    CampaignReport r = campaign(PropertyId::LiftedDynamics, 100, 12, 2, Rational(0));
    std::size_t autonomous = r.aggregates["autonomous"].get<std::size_t>();
    bool mixed = autonomous > 0 && autonomous < 100;
    return {r.property_holds && r.passed == 100 && mixed && r.seconds < 60,
            counts(r) + " (" + std::to_string(autonomous) + " autonomous)"};
}

Outcome criterion9() {
    CampaignReport r = campaign(PropertyId::TranslationReduction, 100, 12, 2, Rational(0));
    return {r.property_holds && r.passed == 100 && r.seconds < 60, counts(r)};
}

Outcome criterion10() {
    CampaignReport r = campaign(PropertyId::ProductReduction, 100, 12, 3, Rational(0));
    std::size_t triples = 0;
    for (const auto& t : r.trials) triples += t.flags.value("factors", 0) == 3;
    bool mixed = triples > 0 && triples < 100;
    return {r.property_holds && r.passed == 100 && mixed && r.seconds < 60,
            counts(r) + " (" + std::to_string(triples) + " triples)"};
}

Outcome criterion11() {
    ExampleBundle b = builtin_example("stable-r3");
    std::vector<std::string> vars = {"t", "x", "p"};
    auto field = [&](std::vector<std::string> comps) {
        PolyVectorField f;
        for (const auto& c : comps) f.push_back(parse_poly(c, vars));
        return f;
    };
    PolyVectorField br = lie_bracket(field({"1", "0", "0"}), field({"0", "t", "1"}));
    bool bracket = br == field({"0", "1", "0"});
    // d/dx is not in span{d/dp + t d/dx} at any t
    bool outside = true;
    for (long tv = -3; tv <= 3; ++tv) outside = outside && !Subspace::span({Vec{0, tv, 1}}, 3).contains(Vec{0, 1, 0});
    FormFamily f(3, {Matrix{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}}}, std::vector<Vec>{unit_vector(3, 0)});
    bool pointwise = true;
    for (long tv = -3; tv <= 3; ++tv) {
        Subspace v = Subspace::span({Vec{0, tv, 1}}, 3);
        pointwise = pointwise && distribution_checks(f, v).passes() && lift_distribution_check(f, v).lifted.passes();
    }
    bool ok = bracket && outside && pointwise && b.all_passed();
    return {ok, ok ? "bracket = d/dx, outside V; linear checks pass at 7 sampled t" : "mismatch" + bundle_failures(b)};
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--only" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: polyred_acceptance [--only N]\n";
            return 2;
        }
    }
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"r6 cross-product example", criterion1},
        {"r4 pullback example", criterion2},
        {"presymplectic double orthogonal campaign", criterion3},
        {"A2 implies nondegeneracy campaign", criterion4},
        {"lift iff / lift identities / equivalence campaigns", criterion5},
        {"k = 1 cosymplectic reduction campaign", criterion6},
        {"electrostatic section residuals and obstruction", criterion7},
        {"lifted dynamics identity", criterion8},
        {"translation reduction of dynamics", criterion9},
        {"product reduction", criterion10},
        {"stable R^3 involutivity counterexample", criterion11},
    };
    if (only < 0 || only > static_cast<int>(criteria.size())) {
        std::cerr << "criterion out of range\n";
        return 2;
    }
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.pass;
        std::cout << "criterion " << std::setw(2) << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  "
                  << criteria[i].first << " -- " << o.detail << " (" << std::fixed << std::setprecision(2)
                  << elapsed(start) << " s)\n";
    }
    return all ? 0 : 1;
}
