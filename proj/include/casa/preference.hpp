#pragma once

#include <cstdint>
#include <vector>

#include "casa/guarantees.hpp"
#include "casa/menu.hpp"
#include "casa/valuation.hpp"

namespace casa {

// Generators for canonical preference structures. Draws are quantized to a
// dyadic lattice (steps of 2^-lattice_bits at each draw site) so the class
// inequalities and the menu-sufficiency identity check exactly in doubles.
struct PreferenceClass {
    enum class Kind { WeakSubstitutes, WeakComplements, PartitionedComplements, Homogeneous };
    Kind kind = Kind::WeakSubstitutes;
    int n_items = 3;
    std::vector<Bundle> partition;  // PartitionedComplements blocks
    double theta_lo = 0.5;          // WeakSubstitutes: bundle discount lower bound
    int lattice_bits = 8;
};

// One valuation vector per bidder over every non-empty bundle (items <= 5),
// each satisfying its class inequalities by construction. Values lie in
// [0, 1]. identical_bidders replicates a single draw across all bidders
// (the maximally correlated case).
ValuationProfile gen_valuation(const PreferenceClass& pc, int n_bidders, std::uint64_t seed,
                               long long trial = 0, bool identical_bidders = false);

// Exhaustive check of the class-defining inequalities for one bidder's
// vector. Exact comparisons; generation keeps everything on a dyadic
// lattice so this never trips on rounding.
bool satisfies_class(const PreferenceClass& pc, const ValuationProfile& v, int bidder);

struct MenuPlan {
    Menu menu;
    int rank = 0;  // the guarantee rank paired with the menu
};

// The simple sufficient menu for each class:
//   WeakSubstitutes          -> individual items,    rank M + 1
//   WeakComplements          -> grand bundle,        rank 2
//   PartitionedComplements   -> the partition,       rank |partition| + 1
//   Homogeneous              -> floor(M/l) bundles of each size l with the
//                               quantity-cap feasibility, rank |menu| + 1
MenuPlan build_menu(const PreferenceClass& pc);

// True iff this bidder's restricted-menu optimum equals the complete-menu
// optimum (both under the menu's feasibility mode). items <= 5.
bool check_expost_sufficiency(const ValuationProfile& v, int bidder, const Menu& menu);

// Monte Carlo check, under maximally correlated draws from the class, that
// E[R^k] >= E[complete-menu surplus] - (k-1)|menu| v_hi / N at 3 SE.
BoundReport sufficiency_surplus_check(const PreferenceClass& pc, const Menu& menu, int k,
                                      int n_bidders, long long trials, std::uint64_t seed);

}  // namespace casa
