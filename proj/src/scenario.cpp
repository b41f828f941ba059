#include "casa/scenario.hpp"

#include <fstream>

#include "casa/errors.hpp"
#include "casa/mechanisms.hpp"
#include "casa/serialize.hpp"

namespace casa {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what, const std::string& field) {
    throw ConfigError(what, field);
}

int resolve_item(const json& e, const std::vector<std::string>& names,
                 const std::string& field) {
    if (e.is_number_integer()) {
        const int i = e.get<int>();
        if (i < 0 || i >= static_cast<int>(names.size())) bad("item index out of range", field);
        return i;
    }
    if (e.is_string()) {
        const std::string s = e.get<std::string>();
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == s) return static_cast<int>(i);
        bad("unknown item name '" + s + "'", field);
    }
    bad("item must be an index or a name", field);
}

Bundle resolve_bundle(const json& e, const std::vector<std::string>& names,
                      const std::string& field) {
    if (!e.is_array()) bad("bundle must be an array of items", field);
    Bundle b;
    for (std::size_t i = 0; i < e.size(); ++i)
        b = b.unite(Bundle({resolve_item(e[i], names, field + "[" + std::to_string(i) + "]")}));
    return b;
}

DistributionSpec dist_from_json(const json& j, const Menu& menu, int n_bidders, double v_lo,
                                double v_hi) {
    DistributionSpec d;
    d.n_bidders = n_bidders;
    d.v_lo = v_lo;
    d.v_hi = v_hi;
    const std::string kind = j.value("kind", "");
    if (kind == "iid-per-bundle")
        d.kind = DistributionSpec::Kind::IidPerBundle;
    else if (kind == "max-correlated")
        d.kind = DistributionSpec::Kind::MaxCorrelated;
    else if (kind == "two-tier") {
        d.kind = DistributionSpec::Kind::TwoTierShock;
        d.tier_k = j.value("k", 2);
        d.target_bundle = j.value("target", 0);
        if (d.target_bundle < 0 || d.target_bundle >= menu.size())
            bad("two-tier target outside the menu", "bidders.distribution.target");
    } else {
        bad("unknown distribution kind '" + kind + "'", "bidders.distribution.kind");
    }
    return d;
}

PreferenceClass pref_from_json(const json& j, int n_items,
                               const std::vector<std::string>& names) {
    PreferenceClass pc;
    pc.n_items = n_items;
    const std::string kind = j.value("kind", "");
    if (kind == "weak-substitutes")
        pc.kind = PreferenceClass::Kind::WeakSubstitutes;
    else if (kind == "weak-complements")
        pc.kind = PreferenceClass::Kind::WeakComplements;
    else if (kind == "partitioned-complements") {
        pc.kind = PreferenceClass::Kind::PartitionedComplements;
        if (!j.contains("partition")) bad("partition required", "bidders.preference.partition");
        for (const auto& blk : j.at("partition"))
            pc.partition.push_back(resolve_bundle(blk, names, "bidders.preference.partition"));
    } else if (kind == "homogeneous")
        pc.kind = PreferenceClass::Kind::Homogeneous;
    else
        bad("unknown preference kind '" + kind + "'", "bidders.preference.kind");
    pc.theta_lo = j.value("theta_lo", 0.5);
    pc.lattice_bits = j.value("lattice_bits", 8);
    return pc;
}

}  // namespace

ScenarioConfig ScenarioConfig::from_json(const json& j) {
    ScenarioConfig cfg;
    if (!j.contains("items")) bad("missing items", "items");
    if (j.at("items").is_number_integer()) {
        cfg.n_items = j.at("items").get<int>();
        for (int i = 0; i < cfg.n_items; ++i) cfg.item_names.push_back(std::to_string(i));
    } else if (j.at("items").is_array()) {
        for (const auto& e : j.at("items")) cfg.item_names.push_back(e.get<std::string>());
        cfg.n_items = static_cast<int>(cfg.item_names.size());
    } else {
        bad("items must be a count or a list of names", "items");
    }
    if (cfg.n_items < 1 || cfg.n_items > Bundle::kMaxItems) bad("item count out of range", "items");

    if (!j.contains("menu")) bad("missing menu", "menu");
    {
        const json& jm = j.at("menu");
        Feasibility mode = Feasibility::Disjoint;
        if (jm.contains("mode")) {
            const std::string m = jm.at("mode").get<std::string>();
            if (m == "disjoint")
                mode = Feasibility::Disjoint;
            else if (m == "quantity-cap")
                mode = Feasibility::QuantityCap;
            else
                bad("unknown menu mode '" + m + "'", "menu.mode");
        }
        std::vector<Bundle> bundles;
        if (jm.contains("bundles")) {
            const auto& jb = jm.at("bundles");
            for (std::size_t i = 0; i < jb.size(); ++i)
                bundles.push_back(
                    resolve_bundle(jb[i], cfg.item_names, "menu.bundles[" + std::to_string(i) + "]"));
        } else if (jm.value("builder", "") == "singletons") {
            for (int i = 0; i < cfg.n_items; ++i) bundles.push_back(Bundle({i}));
        } else if (jm.value("builder", "") == "grand") {
            bundles.push_back(Bundle::all(cfg.n_items));
        } else if (jm.value("builder", "") == "complete") {
            for (std::uint32_t m = 1; m < (1u << cfg.n_items); ++m) bundles.push_back(Bundle(m));
        } else {
            bad("menu needs bundles or a known builder", "menu");
        }
        try {
            cfg.menu.emplace(cfg.n_items, std::move(bundles), mode);
        } catch (const ParamError& e) {
            bad(e.what(), "menu.bundles");
        }
    }

    if (!j.contains("grid")) bad("missing grid", "grid");
    try {
        cfg.grid.emplace(j.at("grid").value("epsilon", 0.0), j.at("grid").value("max_price", 0.0));
    } catch (const ParamError& e) {
        bad(e.what(), "grid");
    }

    if (!j.contains("bidders")) bad("missing bidders", "bidders");
    {
        const json& jb = j.at("bidders");
        cfg.n_bidders = jb.value("count", 0);
        if (cfg.n_bidders < 1) bad("bidder count must be positive", "bidders.count");
        cfg.v_lo = jb.value("v_lo", 0.0);
        cfg.v_hi = jb.value("v_hi", 1.0);
        const int provided = (jb.contains("values") ? 1 : 0) +
                             (jb.contains("distribution") ? 1 : 0) +
                             (jb.contains("preference") ? 1 : 0);
        if (provided != 1)
            bad("exactly one of values/distribution/preference required", "bidders");
        if (jb.contains("values")) {
            const auto& jv = jb.at("values");
            if (static_cast<int>(jv.size()) != cfg.n_bidders)
                bad("one value table per bidder required", "bidders.values");
            ValuationProfile v(cfg.n_bidders, cfg.n_items, cfg.v_lo, cfg.v_hi);
            for (int n = 0; n < cfg.n_bidders; ++n) {
                for (std::size_t e = 0; e < jv[n].size(); ++e) {
                    const std::string field =
                        "bidders.values[" + std::to_string(n) + "][" + std::to_string(e) + "]";
                    const json& entry = jv[n][e];
                    if (!entry.contains("bundle") || !entry.contains("value"))
                        bad("entry needs bundle and value", field);
                    const Bundle b =
                        resolve_bundle(entry.at("bundle"), cfg.item_names, field + ".bundle");
                    if (b.empty()) bad("empty bundle not allowed", field + ".bundle");
                    try {
                        v.set(n, b, entry.at("value").get<double>());
                    } catch (const ParamError& err) {
                        bad(err.what(), field + ".value");
                    }
                }
            }
            cfg.values.emplace(std::move(v));
        } else if (jb.contains("distribution")) {
            cfg.dist = dist_from_json(jb.at("distribution"), *cfg.menu, cfg.n_bidders, cfg.v_lo,
                                      cfg.v_hi);
        } else {
            cfg.pref = pref_from_json(jb.at("preference"), cfg.n_items, cfg.item_names);
        }
    }

    if (!j.contains("strategies")) bad("missing strategies", "strategies");
    for (const auto& js : j.at("strategies")) {
        StrategySpec s;
        if (js.is_string()) {
            s.name = js.get<std::string>();
        } else {
            s.name = js.value("name", "");
            s.params = js.value("params", json::object());
        }
        cfg.strategies.push_back(std::move(s));
    }
    if (static_cast<int>(cfg.strategies.size()) != cfg.n_bidders)
        bad("one strategy per bidder required", "strategies");

    if (j.contains("coalitions")) {
        for (const auto& jg : j.at("coalitions"))
            cfg.coalitions.push_back(jg.get<std::vector<int>>());
        std::vector<char> seen(cfg.n_bidders, 0);
        for (const auto& g : cfg.coalitions)
            for (int n : g) {
                if (n < 0 || n >= cfg.n_bidders) bad("bidder out of range", "coalitions");
                if (seen[n]) bad("bidder in two coalition groups", "coalitions");
                seen[n] = 1;
            }
        for (std::size_t i = 0; i < cfg.strategies.size(); ++i) {
            const bool covered = seen[i];
            const bool named = cfg.strategies[i].name == "coalition";
            if (covered != named)
                bad("bidders in coalition groups must use the 'coalition' strategy and vice versa",
                    "strategies[" + std::to_string(i) + "].name");
        }
    }

    if (j.contains("seeds")) {
        cfg.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    } else {
        cfg.seeds = {1};
    }
    if (j.contains("options")) {
        const json& jo = j.at("options");
        cfg.run.strict_bidder_count = jo.value("strict_bidder_count", false);
        cfg.run.wide_observation = jo.value("wide_observation", false);
        cfg.run.stage_cap = jo.value("stage_cap", static_cast<long long>(1'000'000));
        cfg.vcg_comparison = jo.value("vcg_comparison", false);
    }
    if (cfg.n_bidders < cfg.menu->size() + 1 && cfg.run.strict_bidder_count)
        bad("bidder count below menu size + 1", "bidders.count");
    return cfg;
}

ScenarioConfig ScenarioConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file", path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what(), path);
    }
    return from_json(j);
}

ValuationProfile scenario_valuations(const ScenarioConfig& cfg, std::uint64_t seed) {
    if (cfg.values) return *cfg.values;
    if (cfg.dist) return cfg.dist->sample(*cfg.menu, seed, 0);
    if (cfg.pref) return gen_valuation(*cfg.pref, cfg.n_bidders, seed, 0);
    throw ConfigError("no valuation source", "bidders");
}

std::vector<std::string> strategy_names() {
    return {"straightforward", "jump", "spoiler", "nonstrategic", "scripted", "coalition"};
}

std::vector<StrategyPtr> build_strategies(const ScenarioConfig& cfg,
                                          const ValuationProfile& v) {
    std::vector<StrategyPtr> out(cfg.n_bidders);
    for (int n = 0; n < cfg.n_bidders; ++n) {
        const StrategySpec& s = cfg.strategies[n];
        const json& p = s.params;
        const std::string field = "strategies[" + std::to_string(n) + "]";
        if (s.name == "straightforward") {
            out[n] = make_straightforward(p.is_object() ? p.value("margin", 0.0) : 0.0);
        } else if (s.name == "jump") {
            const double f = p.is_object() ? p.value("fraction", 0.5) : 0.5;
            if (!(f > 0.0 && f <= 1.0)) bad("jump fraction must be in (0,1]", field + ".params");
            out[n] = make_jump_bidder(f);
        } else if (s.name == "spoiler") {
            if (!p.is_object() || !p.contains("target"))
                bad("spoiler needs a target bundle", field + ".params.target");
            const int target = p.at("target").get<int>();
            if (target < 0 || target >= cfg.menu->size())
                bad("spoiler target outside the menu", field + ".params.target");
            out[n] = make_spoiler(target, p.value("cap", cfg.v_hi));
        } else if (s.name == "nonstrategic") {
            NonStrategicPolicy pol;
            const std::string kind =
                p.is_object() ? p.value("policy", "quit-immediately") : "quit-immediately";
            if (kind == "quit-immediately")
                pol.kind = NonStrategicPolicy::Kind::QuitImmediately;
            else if (kind == "quit-after") {
                pol.kind = NonStrategicPolicy::Kind::QuitAfter;
                pol.quit_after = p.value("quit_after", 1);
            } else if (kind == "random-walk") {
                pol.kind = NonStrategicPolicy::Kind::RandomWalk;
                pol.quit_prob = p.value("quit_prob", 0.15);
                pol.raise_prob = p.value("raise_prob", 0.8);
            } else {
                bad("unknown nonstrategic policy '" + kind + "'", field + ".params.policy");
            }
            out[n] = make_non_strategic(pol);
        } else if (s.name == "scripted") {
            std::vector<Action> actions;
            if (p.is_object() && p.contains("actions")) {
                for (const auto& ja : p.at("actions")) {
                    if (ja.contains("quit") && ja.at("quit").get<bool>()) {
                        actions.push_back(Action::quit());
                    } else {
                        std::vector<BidPair> bids;
                        for (const auto& jb : ja.at("bids"))
                            bids.push_back({jb.at(0).get<int>(), jb.at(1).get<int>()});
                        actions.push_back(Action::bid(std::move(bids)));
                    }
                }
            }
            out[n] = make_scripted(std::move(actions));
        } else if (s.name == "coalition") {
            // filled below from the coalition groups
        } else {
            bad("unknown strategy '" + s.name + "'", field + ".name");
        }
    }
    for (const auto& group : cfg.coalitions) {
        auto members = make_coalition_members(group, v, *cfg.menu);
        for (std::size_t i = 0; i < group.size(); ++i) out[group[i]] = std::move(members[i]);
    }
    for (int n = 0; n < cfg.n_bidders; ++n)
        if (!out[n]) bad("'coalition' strategy without a coalition group",
                         "strategies[" + std::to_string(n) + "].name");
    return out;
}

RunArtifacts run_scenario(const ScenarioConfig& cfg, std::uint64_t seed) {
    const ValuationProfile v = scenario_valuations(cfg, seed);
    std::vector<StrategyPtr> strategies = build_strategies(cfg, v);
    Transcript tr = run_auction(*cfg.menu, *cfg.grid, v, strategies, seed, cfg.run);

    json summary;
    summary["seed"] = seed;
    summary["stages"] = tr.entries.size();
    summary["outcome"] = to_json(tr.outcome);
    const int k = cfg.menu->size() + 1;
    if (k <= v.bidders()) {
        const RevenueBound rb = check_revenue_bound(v, *cfg.menu, *cfg.grid, tr.outcome, k);
        summary["revenue_bound"] = {{"k", k},
                                    {"guarantee", rb.guarantee},
                                    {"slack", rb.slack},
                                    {"holds", rb.holds}};
    }
    if (cfg.vcg_comparison) {
        const MechanismOutcome mo = vcg(v, *cfg.menu);
        summary["vcg"] = {{"revenue", mo.revenue},
                          {"total_surplus", mo.total_surplus},
                          {"payments", mo.payments}};
        summary["casa_vs_vcg_revenue"] = tr.outcome.revenue - mo.revenue;
    }
    return {std::move(tr), std::move(summary)};
}

}  // namespace casa
