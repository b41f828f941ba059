#include "casa/dominance.hpp"

#include <algorithm>

#include "casa/errors.hpp"
#include "casa/wdp.hpp"

namespace casa {
namespace {

// b belongs to some revenue maximizer at the given tick vector.
bool in_some_optimum(const Menu& menu, const std::vector<int>& ticks, int b) {
    std::vector<double> w(ticks.begin(), ticks.end());
    const double z = solve_wdp(menu, w, menu.size()).objective;
    const double zf = solve_wdp_containing(menu, w, b, menu.size()).objective;
    return zf == z;
}

}  // namespace

bool quit_is_obviously_dominated(const Observation& obs, DominanceSearch mode,
                                 int exhaustive_menu_cap, int ladder_levels) {
    if (obs.leads_any())
        throw ParamError("quit_is_obviously_dominated: observer must lead nothing");
    const Menu& menu = *obs.menu;
    const PriceGrid& grid = *obs.grid;
    const int m = menu.size();

    // Single-bundle raises: always valid witnesses.
    for (int b = 0; b < m; ++b) {
        const int top = grid.ticks_strictly_below(obs.my_values[b]);
        if (top < obs.price_ticks[b] + 1) continue;  // no grid point in (p_b, v_b)
        std::vector<int> raised = obs.price_ticks;
        raised[b] = top;
        if (in_some_optimum(menu, raised, b)) return true;
    }
    if (mode == DominanceSearch::Witness) return false;

    if (m > exhaustive_menu_cap)
        throw SizeError("quit_is_obviously_dominated: menu too large for exhaustive search");

    // Joint raises over a coarsened ladder per bundle. Ladders always include
    // the current price and, for candidate bundles, the top grid point below
    // the observer's value; intermediate levels sample the rest of the grid.
    std::vector<std::vector<int>> ladder(m);
    for (int b = 0; b < m; ++b) {
        std::vector<int>& lv = ladder[b];
        lv.push_back(obs.price_ticks[b]);
        const int top_below_value = grid.ticks_strictly_below(obs.my_values[b]);
        if (top_below_value >= obs.price_ticks[b] + 1) lv.push_back(top_below_value);
        for (int i = 1; i <= ladder_levels; ++i) {
            const long long span = grid.max_ticks() - obs.price_ticks[b];
            const int t = obs.price_ticks[b] + static_cast<int>(span * i / ladder_levels);
            if (t > obs.price_ticks[b]) lv.push_back(t);
        }
        std::sort(lv.begin(), lv.end());
        lv.erase(std::unique(lv.begin(), lv.end()), lv.end());
    }

    std::vector<int> raised = obs.price_ticks;
    bool found = false;
    auto rec = [&](auto&& self, int b) -> void {
        if (found) return;
        if (b == m) {
            for (int t = 0; t < m && !found; ++t) {
                if (raised[t] <= obs.price_ticks[t]) continue;
                if (!(grid.price(raised[t]) < obs.my_values[t])) continue;
                if (in_some_optimum(menu, raised, t)) found = true;
            }
            return;
        }
        for (int level : ladder[b]) {
            raised[b] = level;
            self(self, b + 1);
            if (found) return;
        }
        raised[b] = obs.price_ticks[b];
    };
    rec(rec, 0);
    return found;
}

}  // namespace casa
