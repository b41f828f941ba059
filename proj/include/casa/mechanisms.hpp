#pragma once

#include <vector>

#include "casa/surplus.hpp"

namespace casa {

struct MechanismOutcome {
    Allocation allocation;          // efficient selection + injective winners
    std::vector<double> payments;   // per bidder, >= 0
    double revenue = 0.0;           // sum of payments
    double total_surplus = 0.0;     // value of the allocation
};

// Vickrey-Clarke-Groves over the given menu: the efficient allocation, with
// each winner paying the externality it imposes (others' best welfare
// without it, minus others' welfare at the efficient allocation). Ties are
// resolved by the winner-determination lexicographic rule, so payments are
// deterministic.
MechanismOutcome vcg(const ValuationProfile& v, const Menu& menu, int menu_cap = 24);

// The floor allocation used to lower-bound VCG revenue on the individual-
// item menu: keep every other bidder's efficient item, then hand each item
// of the excluded bidder to the highest-valuing bidder who has nothing yet
// (ties to the lowest index).
Allocation vcg_floor_allocation(const ValuationProfile& v, int excluded_bidder);

// Grand bundle to the highest-value bidder at the second-highest value
// (ties to the lowest index; a lone bidder pays zero).
MechanismOutcome second_price_grand_bundle(const ValuationProfile& v);

}  // namespace casa
