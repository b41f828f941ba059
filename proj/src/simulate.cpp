#include "casa/simulate.hpp"

#include "casa/errors.hpp"

namespace casa {

Transcript run_auction(const Menu& menu, const PriceGrid& grid, const ValuationProfile& v,
                       const std::vector<StrategyPtr>& strategies, std::uint64_t seed,
                       const RunConfig& rc) {
    const int n = v.bidders();
    if (static_cast<int>(strategies.size()) != n)
        throw ParamError("run_auction: one strategy per bidder required");
    if (grid.price(grid.max_ticks()) <= v.v_hi())
        throw ParamError("run_auction: grid must extend strictly above v_hi");

    AuctionState state = new_auction(menu, grid, n, rc.strict_bidder_count);
    std::vector<Rng> rngs;
    rngs.reserve(n);
    for (int b = 0; b < n; ++b) {
        strategies[b]->reset();
        rngs.emplace_back(derive_seed(seed, 0x5452'0000ull + static_cast<std::uint64_t>(b)));
    }

    Transcript tr(menu, grid, v, seed, rc.wide_observation);
    while (auto mover = next_mover(state)) {
        if (state.stage >= rc.stage_cap)
            throw RunawayError("run_auction: stage safety cap hit", tr.serialize());
        const Observation obs = observe(state, menu, grid, v, *mover, rc.wide_observation);
        const Action action = strategies[*mover]->act(obs, rngs[*mover]);
        const Validation val = validate_action(state, menu, grid, *mover, action);
        if (!val.ok())
            throw ProtocolFault("run_auction: bidder " + std::to_string(*mover) +
                                    " violated rule '" + rule_name(val.rule) + "': " +
                                    val.detail,
                                tr.serialize());
        state = apply_action(std::move(state), *mover, action);
        tr.entries.push_back(
            {state.stage, *mover, observation_digest(obs), action, state.price_ticks});
    }
    tr.final_state = state;
    tr.outcome = settle(state, menu, grid, v);
    return tr;
}

}  // namespace casa
