#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "casa/coalition.hpp"
#include "casa/guarantees.hpp"
#include "casa/preference.hpp"
#include "casa/simulate.hpp"

namespace casa {

struct StrategySpec {
    std::string name;
    nlohmann::json params;
};

// A complete experiment input: items, menu, grid, bidders (explicit values
// or a generator), one strategy per bidder, optional coalition groups, and
// the seeds to run. Schema-validated on load; errors name the field.
struct ScenarioConfig {
    int n_items = 0;
    std::vector<std::string> item_names;  // defaults to "0", "1", ...
    std::optional<Menu> menu;
    std::optional<PriceGrid> grid;
    int n_bidders = 0;
    double v_lo = 0.0, v_hi = 1.0;
    std::optional<ValuationProfile> values;    // explicit tables
    std::optional<DistributionSpec> dist;      // or a distribution
    std::optional<PreferenceClass> pref;       // or a preference class
    std::vector<StrategySpec> strategies;      // size n_bidders
    std::vector<std::vector<int>> coalitions;  // optional groups (size >= 1)
    std::vector<std::uint64_t> seeds;
    RunConfig run;
    bool vcg_comparison = false;

    static ScenarioConfig from_json(const nlohmann::json& j);
    static ScenarioConfig load(const std::string& path);
};

// Resolve the profile for one seed (explicit, sampled, or generated).
ValuationProfile scenario_valuations(const ScenarioConfig& cfg, std::uint64_t seed);

// Instantiate the strategy profile: named strategies from the registry,
// coalition members for bidders covered by a coalition group.
std::vector<StrategyPtr> build_strategies(const ScenarioConfig& cfg,
                                          const ValuationProfile& v);

struct RunArtifacts {
    Transcript transcript;
    nlohmann::json summary;
};

RunArtifacts run_scenario(const ScenarioConfig& cfg, std::uint64_t seed);

// Registry names accepted in ScenarioConfig::strategies.
std::vector<std::string> strategy_names();

}  // namespace casa
