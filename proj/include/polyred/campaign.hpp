#pragma once

#include "polyred/rational.hpp"
#include "polyred/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace polyred {

enum class PropertyId {
    PresymDoubleOrtho,
    A2ImpliesNondeg,
    LiftIff,
    LiftIdentities,
    ReductionEquivalence,
    AlbertK1,
    ProductReduction,
    KsymKcosymConsistency,
    LiftedDynamics,
    TranslationReduction,
};

std::string to_string(PropertyId p);
PropertyId parse_property(const std::string& s);
std::vector<PropertyId> all_properties();

struct CampaignConfig {
    PropertyId property = PropertyId::PresymDoubleOrtho;
    std::size_t trials = 1000;
    std::uint64_t master_seed = 1;
    std::size_t dim_max = 10;
    std::size_t k_max = 3;
    Rational adversarial_fraction{1, 4};
    unsigned threads = 0;  // 0: POLYRED_THREADS or hardware concurrency

    // throws std::invalid_argument
    void validate() const;
};

struct TrialOutcome {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    bool adversarial = false;
    bool passed = false;
    json flags;     // property-specific observations
    json instance;  // the generated instance, kept for failures and exhibits
};

// trial i is adversarial iff floor((i+1) f) > floor(i f), which spreads the
// adversarial trials evenly and makes their count floor(trials * f)
bool is_adversarial_trial(std::size_t index, const Rational& fraction);

// one trial, fully determined by (property, seed, adversarial, bounds)
TrialOutcome run_trial(const CampaignConfig& cfg, std::uint64_t seed, bool adversarial);

struct CampaignReport {
    CampaignConfig config;
    std::vector<TrialOutcome> trials;  // sorted by index
    std::size_t passed = 0, failed = 0;
    json aggregates;
    bool property_holds = false;
    double seconds = 0;
    unsigned threads_used = 1;
};

CampaignReport run_campaign(const CampaignConfig& cfg);
// the report minus timing, for comparisons between runs
json report_json(const CampaignReport& r, bool include_timing = true);

}  // namespace polyred
