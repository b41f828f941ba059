#pragma once

#include <vector>

#include "casa/strategy.hpp"
#include "casa/valuation.hpp"

namespace casa {

// A partition of the bidders into strategic coalitions. Each group bids to
// maximize the sum of member utilities and can shift won bundles internally.
struct CoalitionSpec {
    std::vector<std::vector<int>> groups;

    // Every bidder in exactly one group.
    void validate(int n_bidders) const;
    // Group sizes sorted descending.
    std::vector<int> sizes_desc() const;
};

// The guarantee rank under collusive play: one plus the sum of the largest
// menu-size-many coalition sizes. May exceed the bidder count, in which
// case the bound is vacuous.
int coalition_rank(const CoalitionSpec& spec, int menu_size);

// One strategy per bidder. Members pool valuations (per-bundle max over the
// group), treat bundles led by any member as secured, and quit only when the
// group has no profitable raise left. Singleton groups reduce exactly to the
// straightforward bidder.
std::vector<StrategyPtr> make_coalition_profile(const CoalitionSpec& spec,
                                                const ValuationProfile& v, const Menu& menu);

// Strategies for one group's members only, in group order.
std::vector<StrategyPtr> make_coalition_members(const std::vector<int>& group,
                                                const ValuationProfile& v, const Menu& menu);

}  // namespace casa
