#include "polyred/campaign.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace polyred;

TEST_CASE("adversarial schedule hits floor(trials * fraction)") {
    for (auto [num, den] : {std::pair{1, 4}, std::pair{1, 2}, std::pair{2, 3}, std::pair{0, 1}, std::pair{1, 1}}) {
        Rational f(num, den);
        std::size_t count = 0;
        for (std::size_t i = 0; i < 1000; ++i) count += is_adversarial_trial(i, f);
        CHECK(count == static_cast<std::size_t>(1000 * num / den));
    }
}

TEST_CASE("config validation") {
    CampaignConfig c;
    c.trials = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.trials = 1;
    c.dim_max = 41;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.dim_max = 10;
    c.adversarial_fraction = Rational(3, 2);
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    CHECK_THROWS_AS(parse_property("LEMMA"), std::invalid_argument);
    for (auto p : all_properties()) CHECK(parse_property(to_string(p)) == p);
}

TEST_CASE("serial and parallel runs give the same report") {
    for (auto p : all_properties()) {
        CampaignConfig c;
        c.property = p;
        c.trials = 40;
        c.master_seed = 17;
        c.adversarial_fraction = Rational(1, 2);
        c.threads = 1;
        json serial = report_json(run_campaign(c), false);
        c.threads = 4;
        json parallel = report_json(run_campaign(c), false);
        CHECK_MESSAGE(serial == parallel, to_string(p));
    }
}

TEST_CASE("a failing trial replays identically from its seed") {
    CampaignConfig c;
    c.property = PropertyId::A2ImpliesNondeg;
    c.trials = 200;
    c.master_seed = 3;
    c.dim_max = 12;
    c.adversarial_fraction = Rational(1, 4);
    CampaignReport r = run_campaign(c);
    REQUIRE(r.failed > 0);
    for (const auto& t : r.trials) {
        if (t.passed) continue;
        TrialOutcome again = run_trial(c, t.seed, t.adversarial);
        CHECK_FALSE(again.passed);
        CHECK(again.instance == t.instance);
        CHECK(again.flags == t.flags);
    }
    json j = report_json(r);
    CHECK(j["failures"].size() == r.failed);
    CHECK(j["failures"][0].contains("instance"));
}

TEST_CASE("campaigns that should hold do hold at small scale") {
    for (auto p : {PropertyId::PresymDoubleOrtho, PropertyId::LiftIff, PropertyId::LiftIdentities,
                   PropertyId::ReductionEquivalence, PropertyId::AlbertK1, PropertyId::ProductReduction,
                   PropertyId::KsymKcosymConsistency, PropertyId::LiftedDynamics, PropertyId::TranslationReduction}) {
        CampaignConfig c;
        c.property = p;
        c.trials = 60;
        c.master_seed = 5;
        c.adversarial_fraction = Rational(1, 2);
        CampaignReport r = run_campaign(c);
        CHECK_MESSAGE(r.property_holds, to_string(p));
        CHECK(r.passed == 60);
    }
}
