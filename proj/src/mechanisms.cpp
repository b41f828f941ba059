#include "casa/mechanisms.hpp"

#include <algorithm>

#include "casa/errors.hpp"
#include "casa/order_stats.hpp"

namespace casa {

MechanismOutcome vcg(const ValuationProfile& v, const Menu& menu, int menu_cap) {
    MechanismOutcome out;
    out.allocation = efficient_surplus(v, menu, menu_cap);
    out.total_surplus = out.allocation.value;
    out.payments.assign(v.bidders(), 0.0);

    for (int n = 0; n < v.bidders(); ++n) {
        bool wins = false;
        for (int w : out.allocation.bidder_of)
            if (w == n) wins = true;
        if (!wins) continue;  // non-winners impose no externality and pay nothing

        const double others_best = efficient_surplus(v, menu, menu_cap, n).value;
        double others_here = 0.0;
        for (std::size_t i = 0; i < out.allocation.selection.size(); ++i)
            if (out.allocation.bidder_of[i] != n)
                others_here +=
                    v.value(out.allocation.bidder_of[i],
                            menu.bundle(out.allocation.selection[i]));
        double pay = others_best - others_here;
        if (pay < 0.0 && pay > -1e-9) pay = 0.0;  // float dust only; >= 0 mathematically
        out.payments[n] = pay;
        out.revenue += pay;
    }
    return out;
}

Allocation vcg_floor_allocation(const ValuationProfile& v, int excluded_bidder) {
    if (excluded_bidder < 0 || excluded_bidder >= v.bidders())
        throw ParamError("vcg_floor_allocation: bidder index out of range");

    std::vector<Bundle> items;
    for (int i = 0; i < v.items(); ++i) items.push_back(Bundle({i}));
    const Menu item_menu(v.items(), items);
    const Allocation star = efficient_surplus(v, item_menu, item_menu.size());

    Allocation floor;
    std::vector<char> assigned(v.bidders(), 0);
    assigned[excluded_bidder] = 1;  // excluded from the floor allocation entirely
    std::vector<int> orphaned;      // items the excluded bidder held under star
    for (std::size_t i = 0; i < star.selection.size(); ++i) {
        if (star.bidder_of[i] == excluded_bidder) {
            orphaned.push_back(star.selection[i]);
        } else {
            floor.selection.push_back(star.selection[i]);
            floor.bidder_of.push_back(star.bidder_of[i]);
            assigned[star.bidder_of[i]] = 1;
        }
    }
    for (int item : orphaned) {
        int pick = -1;
        double best = -1.0;
        for (int n = 0; n < v.bidders(); ++n) {
            if (assigned[n]) continue;
            const double val = v.value(n, item_menu.bundle(item));
            if (pick < 0 || val > best) {
                pick = n;
                best = val;
            }
        }
        if (pick < 0) continue;  // everyone already holds something
        floor.selection.push_back(item);
        floor.bidder_of.push_back(pick);
        assigned[pick] = 1;
    }

    // normalize to ascending selection order
    std::vector<std::size_t> order(floor.selection.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return floor.selection[a] < floor.selection[b]; });
    Allocation sorted;
    for (std::size_t i : order) {
        sorted.selection.push_back(floor.selection[i]);
        sorted.bidder_of.push_back(floor.bidder_of[i]);
    }
    for (std::size_t i = 0; i < sorted.selection.size(); ++i)
        sorted.value += v.value(sorted.bidder_of[i], item_menu.bundle(sorted.selection[i]));
    return sorted;
}

MechanismOutcome second_price_grand_bundle(const ValuationProfile& v) {
    const Bundle grand = Bundle::all(v.items());
    const std::vector<double> vals = v.bundle_values(grand);
    int winner = 0;
    for (int n = 1; n < v.bidders(); ++n)
        if (vals[n] > vals[winner]) winner = n;

    MechanismOutcome out;
    out.allocation.selection = {0};
    out.allocation.bidder_of = {winner};
    out.allocation.value = vals[winner];
    out.total_surplus = vals[winner];
    out.payments.assign(v.bidders(), 0.0);
    out.payments[winner] = v.bidders() >= 2 ? kth_highest(vals, 2) : 0.0;
    out.revenue = out.payments[winner];
    return out;
}

}  // namespace casa
