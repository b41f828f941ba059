#pragma once

#include <cstdint>
#include <vector>

#include "casa/strategy.hpp"
#include "casa/transcript.hpp"

namespace casa {

struct RunConfig {
    long long stage_cap = 1'000'000;  // safety cap; RunawayError beyond it
    bool strict_bidder_count = false;
    bool wide_observation = false;
};

// Drives one auction to termination: cycle movers, observe, act, validate,
// apply; then settle. Fully deterministic given (seed, strategies). An
// invalid action is a protocol fault and aborts with the partial transcript
// attached. Each strategy draws from its own stream derived from the seed
// and its bidder index.
Transcript run_auction(const Menu& menu, const PriceGrid& grid, const ValuationProfile& v,
                       const std::vector<StrategyPtr>& strategies, std::uint64_t seed,
                       const RunConfig& rc = {});

}  // namespace casa
