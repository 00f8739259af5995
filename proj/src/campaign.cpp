#include "polyred/campaign.hpp"

#include "polyred/random_instances.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace polyred {

std::string to_string(PropertyId p) {
    switch (p) {
        case PropertyId::PresymDoubleOrtho: return "PRESYM_DOUBLE_ORTHO";
        case PropertyId::A2ImpliesNondeg: return "A2_IMPLIES_NONDEG";
        case PropertyId::LiftIff: return "LIFT_IFF";
        case PropertyId::LiftIdentities: return "LIFT_LEMMA_43";
        case PropertyId::ReductionEquivalence: return "EQUIVALENCE_44";
        case PropertyId::AlbertK1: return "ALBERT_K1";
        case PropertyId::ProductReduction: return "PRODUCT_REDUCTION";
        case PropertyId::KsymKcosymConsistency: return "KSYM_KCOSYM_CONSISTENCY";
        case PropertyId::LiftedDynamics: return "LIFTED_DYNAMICS";
        case PropertyId::TranslationReduction: return "TRANSLATION_REDUCTION";
    }
    return "?";
}

std::vector<PropertyId> all_properties() {
    return {PropertyId::PresymDoubleOrtho, PropertyId::A2ImpliesNondeg,      PropertyId::LiftIff,
            PropertyId::LiftIdentities,       PropertyId::ReductionEquivalence,        PropertyId::AlbertK1,
            PropertyId::ProductReduction,  PropertyId::KsymKcosymConsistency, PropertyId::LiftedDynamics,
            PropertyId::TranslationReduction};
}

PropertyId parse_property(const std::string& s) {
    for (auto p : all_properties())
        if (to_string(p) == s) return p;
    throw std::invalid_argument("unknown property '" + s + "'");
}

void CampaignConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("campaign: trials must be at least 1");
    if (dim_max < 1 || dim_max > 40) throw std::invalid_argument("campaign: dim_max must lie in [1, 40]");
    if (k_max < 1) throw std::invalid_argument("campaign: k_max must be at least 1");
    if (adversarial_fraction < Rational(0) || adversarial_fraction > Rational(1))
        throw std::invalid_argument("campaign: adversarial fraction must lie in [0, 1]");
}

bool is_adversarial_trial(std::size_t index, const Rational& fraction) {
    auto fl = [&](std::size_t i) {
        mpq_class x = fraction.raw() * mpq_class(static_cast<unsigned long>(i));
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
        return q;
    };
    return fl(index + 1) > fl(index);
}

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return static_cast<std::size_t>(uniform_int(rng, static_cast<long>(lo), static_cast<long>(hi)));
}

void trial_presym(const CampaignConfig& cfg, Rng& rng, TrialOutcome& t) {
    PresymplecticSample s = random_presymplectic(rng, cfg.dim_max, t.adversarial);
    Subspace lhs = poly_orthogonal(poly_orthogonal(s.s, s.forms), s.forms);
    Subspace rhs = subspace_sum(s.s, form_kernel(s.forms.omega(0)));
    t.passed = lhs == rhs;
    t.flags = {{"dim", s.forms.dim()}, {"dim_S", s.s.dim()}, {"rank_omega", rank(s.forms.omega(0))}};
    t.instance = {{"structure", to_json(s.forms)}, {"S", to_json(s.s)}};
}

void trial_a2(const CampaignConfig& cfg, Rng& rng, TrialOutcome& t) {
    ActionPointData d = random_polysymplectic_action(rng, cfg.dim_max, cfg.k_max, t.adversarial);
    bool a2 = check_condition(d, ConditionId::A2).holds;
    bool a1 = check_condition(d, ConditionId::A1).holds;
    bool nondeg = check_condition(d, ConditionId::NondegPolysym).holds;
    t.passed = !a2 || nondeg;
    t.flags = {{"k", d.forms.k()}, {"dim", d.forms.dim()}, {"a1", a1}, {"a2", a2}, {"nondeg", nondeg},
               {"regular", regular_audit(d)}};
    t.instance = to_json(d);
}

void trial_lift_iff(const CampaignConfig& cfg, Rng& rng, TrialOutcome& t) {
    FormFamily f = random_lift_candidate(rng, cfg.dim_max, cfg.k_max, t.adversarial);
    LiftedFamily l = lift_structure(f);
    bool base_ok = l.base_kind.tag == StructureTag::Polycosymplectic;
    bool lift_ok = l.lifted_kind.tag == StructureTag::Polysymplectic;
    bool round_trip = recover(l) == f;
    // the generator promises valid inputs unless adversarial
    bool generator_contract = base_ok != t.adversarial;
    t.passed = l.iff_applicable && l.iff_consistent && round_trip && generator_contract;
    t.flags = {{"k", f.k()}, {"dim", f.dim()}, {"base_polycosymplectic", base_ok},
               {"lift_polysymplectic", lift_ok}, {"iff_applicable", l.iff_applicable}, {"round_trip", round_trip}};
    t.instance = to_json(f);
}

void trial_lift_identities(const CampaignConfig& cfg, Rng& rng, TrialOutcome& t) {
    ActionPointData d = random_polycosymplectic_action(rng, cfg.dim_max, 1, cfg.k_max, t.adversarial);
    LiftLemmaReport r = verify_lift_lemma(d);
    t.passed = r.holds();
    json ids = json::array();
    for (const auto& c : r.identities) ids.push_back(c.holds);
    t.flags = {{"k", d.forms.k()}, {"dim", d.forms.dim()}, {"identities", ids},
               {"nondeg", check_condition(d, ConditionId::NondegPolyco).holds}};
    t.instance = to_json(d);
}

void trial_equivalence(const CampaignConfig& cfg, Rng& rng, TrialOutcome& t) {
    ActionPointData d = random_polycosymplectic_action(rng, cfg.dim_max, 1, cfg.k_max, t.adversarial);
    EquivalenceReport r = equivalence_check(d);
    t.passed = r.holds();
    t.flags = to_json(r);
    t.flags["k"] = d.forms.k();
    t.flags["dim"] = d.forms.dim();
    t.instance = to_json(d);
}

void trial_albert(const CampaignConfig& cfg, Rng& rng, TrialOutcome& t) {
    ActionPointData d = random_polycosymplectic_action(rng, cfg.dim_max, 1, 1, t.adversarial);
    ConditionReport r = check_condition(d, ConditionId::AlbertK1);
    LinearReduction red = linear_reduce(d);
    t.passed = r.holds && red.verdicts_match() && red.reduced_kind.tag == StructureTag::Polycosymplectic;
    t.flags = {{"dim", d.forms.dim()}, {"dim_gtilde", d.gtilde.dim()}, {"holds", r.holds},
               {"reduced_dim", red.reduced.dim()}};
    t.instance = to_json(d);
}

void trial_product(const CampaignConfig& cfg, Rng& rng, TrialOutcome& t) {
    std::size_t m = pick(rng, 2, 3);
    std::size_t n_max = std::max<std::size_t>(1, (cfg.dim_max / m - 1) / 2);
    std::vector<FormFamily> factors, reduced;
    std::vector<Subspace> gs;
    for (std::size_t i = 0; i < m; ++i) {
        CosymplecticFactor c = random_cosymplectic_factor(rng, n_max);
        LinearReduction r = linear_reduce(ActionPointData{c.forms, c.gtilde, true, c.gtilde.dim()});
        factors.push_back(c.forms);
        gs.push_back(c.gtilde);
        reduced.push_back(r.reduced);
    }
    Subspace g = gs[0];
    for (std::size_t i = 1; i < m; ++i) g = direct_product(g, gs[i]);
    ActionPointData d{product_cosymplectic(factors), g, true, g.dim()};
    LinearReduction whole = linear_reduce(d);
    FormFamily expected = product_cosymplectic(reduced);
    t.passed = whole.reduced == expected;
    t.flags = {{"factors", m}, {"dim", d.forms.dim()}, {"reduced_dim", whole.reduced.dim()}};
    t.instance = to_json(d);
}

std::vector<std::string> polysym_support(const std::vector<std::string>& vars, std::size_t k) {
    return std::vector<std::string>(vars.begin() + static_cast<long>(k), vars.end());
}

void trial_ksym_kcosym(const CampaignConfig& cfg, Rng& rng, TrialOutcome& t) {
    std::size_t k = pick(rng, 1, std::min<std::size_t>(cfg.k_max, 3));
    std::size_t n_max = std::max<std::size_t>(1, (cfg.dim_max - k) / (k + 1));
    std::size_t n = pick(rng, 1, std::min<std::size_t>(n_max, 3));
    auto vars = standard_variable_names(k, n, true);
    auto pvars = standard_variable_names(k, n, false);
    MultiPoly h = random_polynomial(rng, vars, pvars, 3, 6, 3);
    Vec point = random_vector(rng, vars.size(), 3);
    PointSolution co = solve_hamiltonian_kvector(standard_model(k, n, true), h, point, KMode::KCosym);

    FormFamily ps = standard_model(k, n, false);
    MultiPoly hp = h.rebase(pvars);
    Vec ppoint(point.begin() + static_cast<long>(k), point.end());
    PointSolution sym = solve_hamiltonian_kvector(ps, hp, ppoint, KMode::KSym);
    // strip the t-components and test (k-Sym) directly
    Vec flat(ps.dim());
    for (std::size_t a = 0; a < k; ++a) {
        Vec leg(co.legs[a].begin() + static_cast<long>(k), co.legs[a].end());
        flat = axpy(1, vec_times(leg, ps.omega(a)), flat);
    }
    Vec dh(ps.dim());
    for (std::size_t j = 0; j < ps.dim(); ++j) dh[j] = hp.derivative(j).evaluate(ppoint);
    bool stripped_ok = flat == dh;
    t.passed = co.verified && sym.verified && stripped_ok && co.freedom == sym.freedom;
    t.flags = {{"k", k}, {"n", n}, {"stripped_solves_ksym", stripped_ok}, {"freedom_kcosym", co.freedom},
               {"freedom_ksym", sym.freedom}};
    t.instance = {{"k", k}, {"n", n}, {"hamiltonian", to_json(h)}, {"point", to_json(point)}};
}

using FreeParts = std::vector<std::vector<std::vector<MultiPoly>>>;

FreeParts random_free_parts(Rng& rng, std::size_t k, std::size_t n, const std::vector<std::string>& vars,
                            const std::vector<std::string>& support, bool skip_first_field) {
    FreeParts free(k, std::vector<std::vector<MultiPoly>>(k));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t i = 0; i < n; ++i)
                free[a][b].push_back(skip_first_field && i == 0 ? MultiPoly(vars)
                                                                 : random_polynomial(rng, vars, support, 2, 3, 2));
    return free;
}

void trial_lifted_dynamics(const CampaignConfig& cfg, Rng& rng, TrialOutcome& t) {
    std::size_t k = pick(rng, 1, std::min<std::size_t>(cfg.k_max, 2));
    std::size_t n = pick(rng, 1, 2);
    bool autonomous = uniform_int(rng, 0, 1) == 0;
    CoordinateModel m = standard_coordinates(k, n, true);
    auto pvars = polysym_support(m.vars, k);
    const auto& support = autonomous ? pvars : m.vars;
    MultiPoly h = random_polynomial(rng, m.vars, support, 3, 6, 3);
    PolyKVector x = darboux_kcosym_solution(k, n, h, random_free_parts(rng, k, n, m.vars, support, false));
    bool solves = kvector_residual(m, h, x, KMode::KCosym).all_zero();
    bool lifted = solves && lift_dynamics_verify(m, h, x).holds;
    bool stripped = true;
    if (autonomous) {
        CoordinateModel pm = standard_coordinates(k, n, false);
        PolyKVector sx;
        for (const auto& leg : x.legs) {
            PolyVectorField f;
            for (std::size_t i = k; i < leg.size(); ++i) f.push_back(leg[i].rebase(pm.vars));
            sx.legs.push_back(std::move(f));
        }
        stripped = kvector_residual(pm, h.rebase(pm.vars), sx, KMode::KSym).all_zero();
    }
    t.passed = solves && lifted && stripped;
    t.flags = {{"k", k}, {"n", n}, {"autonomous", autonomous}, {"solves_kcosym", solves},
               {"lift_identity", lifted}, {"stripped_solves_ksym", stripped}};
    t.instance = {{"k", k}, {"n", n}, {"hamiltonian", to_json(h)}, {"kvector", to_json(x)}};
}

void trial_translation(const CampaignConfig& cfg, Rng& rng, TrialOutcome& t) {
    std::size_t k = pick(rng, 1, std::min<std::size_t>(cfg.k_max, 2));
    std::size_t n = pick(rng, 1, 3);
    CoordinateModel m = standard_coordinates(k, n, true);
    StandardIndex ix{k, n, true};
    std::vector<std::string> support;
    for (const auto& v : m.vars)
        if (v != "q1") support.push_back(v);
    MultiPoly h = random_polynomial(rng, m.vars, support, 3, 6, 3);
    std::vector<Rational> mu;
    for (std::size_t a = 0; a < k; ++a) mu.push_back(uniform_int(rng, -2, 2));
    PolyKVector x = darboux_kcosym_solution(k, n, h, random_free_parts(rng, k, n, m.vars, support, true));
    TranslationReport r = translation_reduce_verify(h, x, k, n, mu);

    // the translation generator d/dq1 at a random point of the level set
    Vec q = random_vector(rng, n, 2);
    std::vector<Vec> momenta;
    for (std::size_t a = 0; a < k; ++a) {
        Vec p = random_vector(rng, n, 2);
        p[0] = mu[a];
        momenta.push_back(p);
    }
    AffineGenerator g{Matrix(n, n), unit_vector(n, 0)};
    CotangentData c = cotangent_momentum_data({g}, q, k, momenta, random_vector(rng, k, 2));
    DimensionReport dims = dimension_check(c.data, 1);
    std::size_t reduced_model_dim = k + (k + 1) * (n - 1);
    bool dims_ok = dims.formula_ok && dims.regularity_consistent && dims.free_consistent &&
                   dims.reduced_dim == reduced_model_dim && dims.reduced_dim == ix.dim() - k - 1;
    bool momentum_ok = momentum_relation_holds(c, {g});
    for (std::size_t a = 0; a < k; ++a) momentum_ok = momentum_ok && c.j[0][a] == mu[a];
    MultiPoly noether = noether_residual(m, h, x, cotangent_lift_field(k, n, g), momentum_polynomials(k, n, g));

    t.passed = r.holds && dims_ok && momentum_ok && noether.is_zero();
    t.flags = {{"k", k}, {"n", n}, {"reduced_solves", r.holds}, {"dimension_formula", dims_ok},
               {"reduced_dim", dims.reduced_dim}, {"momentum_relation", momentum_ok},
               {"noether_zero", noether.is_zero()}};
    json mj = json::array();
    for (const auto& v : mu) mj.push_back(to_json(v));
    t.instance = {{"k", k}, {"n", n}, {"mu", mj}, {"hamiltonian", to_json(h)}, {"kvector", to_json(x)}};
}

}  // namespace

TrialOutcome run_trial(const CampaignConfig& cfg, std::uint64_t seed, bool adversarial) {
    TrialOutcome t;
    t.seed = seed;
    t.adversarial = adversarial;
    Rng rng(seed);
    try {
        switch (cfg.property) {
            case PropertyId::PresymDoubleOrtho: trial_presym(cfg, rng, t); break;
            case PropertyId::A2ImpliesNondeg: trial_a2(cfg, rng, t); break;
            case PropertyId::LiftIff: trial_lift_iff(cfg, rng, t); break;
            case PropertyId::LiftIdentities: trial_lift_identities(cfg, rng, t); break;
            case PropertyId::ReductionEquivalence: trial_equivalence(cfg, rng, t); break;
            case PropertyId::AlbertK1: trial_albert(cfg, rng, t); break;
            case PropertyId::ProductReduction: trial_product(cfg, rng, t); break;
            case PropertyId::KsymKcosymConsistency: trial_ksym_kcosym(cfg, rng, t); break;
            case PropertyId::LiftedDynamics: trial_lifted_dynamics(cfg, rng, t); break;
            case PropertyId::TranslationReduction: trial_translation(cfg, rng, t); break;
        }
    } catch (const std::exception& e) {
        t.passed = false;
        t.flags["exception"] = e.what();
    }
    return t;
}

namespace {

unsigned thread_count(const CampaignConfig& cfg) {
    unsigned n = cfg.threads;
    if (n == 0) {
        if (const char* env = std::getenv("POLYRED_THREADS")) n = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
        if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    }
    return static_cast<unsigned>(std::min<std::size_t>(n, cfg.trials));
}

json aggregate(const CampaignConfig& cfg, const std::vector<TrialOutcome>& trials, bool& holds) {
    json agg = json::object();
    std::size_t adversarial = 0;
    for (const auto& t : trials) adversarial += t.adversarial;
    agg["adversarial_trials"] = adversarial;
    holds = std::all_of(trials.begin(), trials.end(), [](const TrialOutcome& t) { return t.passed; });
    auto count = [&](auto pred) {
        return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), pred));
    };
    auto flag = [](const TrialOutcome& t, const char* key) {
        return t.flags.contains(key) && t.flags.at(key).is_boolean() && t.flags.at(key).get<bool>();
    };
    switch (cfg.property) {
        case PropertyId::A2ImpliesNondeg: {
            agg["a2_holds"] = count([&](const TrialOutcome& t) { return flag(t, "a2"); });
            agg["nondeg_holds"] = count([&](const TrialOutcome& t) { return flag(t, "nondeg"); });
            agg["a1_holds"] = count([&](const TrialOutcome& t) { return flag(t, "a1"); });
            agg["violations_a2_without_nondeg"] =
                count([&](const TrialOutcome& t) { return flag(t, "a2") && !flag(t, "nondeg"); });
            auto exhibit = std::find_if(trials.begin(), trials.end(),
                                        [&](const TrialOutcome& t) { return flag(t, "nondeg") && !flag(t, "a1"); });
            std::size_t exhibits =
                count([&](const TrialOutcome& t) { return flag(t, "nondeg") && !flag(t, "a1"); });
            agg["exhibits_nondeg_without_a1"] = exhibits;
            if (exhibit != trials.end())
                agg["first_exhibit"] = {{"trial", exhibit->index}, {"seed", exhibit->seed},
                                        {"adversarial", exhibit->adversarial}, {"instance", exhibit->instance}};
            holds = holds && exhibits > 0;
            break;
        }
        case PropertyId::LiftIff:
            agg["base_polycosymplectic"] = count([&](const TrialOutcome& t) { return flag(t, "base_polycosymplectic"); });
            agg["lift_polysymplectic"] = count([&](const TrialOutcome& t) { return flag(t, "lift_polysymplectic"); });
            break;
        case PropertyId::LiftIdentities:
        case PropertyId::AlbertK1:
            agg["nondeg_failures"] = count([&](const TrialOutcome& t) {
                return t.flags.contains("nondeg") && !flag(t, "nondeg");
            });
            break;
        case PropertyId::ReductionEquivalence:
            agg["base_nondeg_false"] =
                count([&](const TrialOutcome& t) { return t.flags.contains("base_nondeg_polyco") && !flag(t, "base_nondeg_polyco"); });
            agg["base_c1_false"] =
                count([&](const TrialOutcome& t) { return t.flags.contains("base_c1") && !flag(t, "base_c1"); });
            break;
        case PropertyId::LiftedDynamics:
            agg["autonomous"] = count([&](const TrialOutcome& t) { return flag(t, "autonomous"); });
            break;
        default: break;
    }
    return agg;
}

}  // namespace

CampaignReport run_campaign(const CampaignConfig& cfg) {
    cfg.validate();
    auto start = std::chrono::steady_clock::now();
    CampaignReport rep;
    rep.config = cfg;
    rep.trials.resize(cfg.trials);
    rep.threads_used = thread_count(cfg);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cfg.trials; i = next++) {
            TrialOutcome t = run_trial(cfg, trial_seed(cfg.master_seed, i), is_adversarial_trial(i, cfg.adversarial_fraction));
            t.index = i;
            rep.trials[i] = std::move(t);
        }
    };
    if (rep.threads_used <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < rep.threads_used; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const auto& t : rep.trials) (t.passed ? rep.passed : rep.failed)++;
    rep.aggregates = aggregate(cfg, rep.trials, rep.property_holds);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

json report_json(const CampaignReport& r, bool include_timing) {
    const auto& c = r.config;
    json j;
    j["property"] = to_string(c.property);
    j["config"] = {{"trials", c.trials},
                   {"master_seed", c.master_seed},
                   {"dim_max", c.dim_max},
                   {"k_max", c.k_max},
                   {"adversarial_fraction", c.adversarial_fraction.to_string()}};
    j["verdict"] = r.property_holds ? "holds" : "violated";
    j["passed"] = r.passed;
    j["failed"] = r.failed;
    j["aggregates"] = r.aggregates;
    json failures = json::array();
    json seeds = json::array();
    for (const auto& t : r.trials) {
        seeds.push_back({{"trial", t.index}, {"seed", t.seed}, {"adversarial", t.adversarial}, {"passed", t.passed}});
        if (!t.passed)
            failures.push_back({{"trial", t.index}, {"seed", t.seed}, {"adversarial", t.adversarial},
                                {"flags", t.flags}, {"instance", t.instance}});
    }
    j["failures"] = failures;
    j["trials"] = seeds;
    if (include_timing) {
        j["seconds"] = r.seconds;
        j["threads"] = r.threads_used;
    }
    return j;
}

}  // namespace polyred
