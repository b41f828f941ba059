#pragma once

#include <vector>

#include "casa/matching.hpp"
#include "casa/menu.hpp"
#include "casa/valuation.hpp"

namespace casa {

// A feasible selection of menu bundles together with the bidder each one is
// assigned to. bidder_of runs parallel to selection; -1 marks unassigned.
struct Allocation {
    std::vector<int> selection;  // ascending menu bundle indices
    std::vector<int> bidder_of;
    double value = 0.0;
};

// The maximal total value over feasible selections and injective bidder
// assignments. Selections larger than the bidder count are skipped (no
// injective assignment exists). Ties: lexicographically smallest selection.
// exclude_bidder (>= 0) removes one bidder from the assignment side.
Allocation efficient_surplus(const ValuationProfile& v, const Menu& menu, int menu_cap = 24,
                             int exclude_bidder = -1);

// Efficient surplus against the complete menu of all non-empty bundles.
// Requires v.items() <= 5 so the 2^M - 1 menu stays enumerable.
Allocation complete_menu_surplus(const ValuationProfile& v,
                                 Feasibility mode = Feasibility::Disjoint);

}  // namespace casa
