#include "casa/wdp.hpp"

#include <algorithm>
#include <cmath>

#include "casa/errors.hpp"

namespace casa {
namespace {

// Subset-tree DFS over ascending bundle indices: every node is a feasible
// selection, children extend it with a later index. Visiting order is
// lexicographic on index sequences. Ties keep searching (the bound prunes
// only strictly dominated branches) so the lexicographically smallest
// optimum is always found.
struct Search {
    const Menu& menu;
    std::span<const double> w;
    int forced;  // -1: unconstrained; else selections must contain it
    std::vector<double> suffix_gain;  // suffix_gain[i] = sum of max(w[j],0), j >= i
    std::vector<int> cur;
    std::vector<int> best_sel;
    double best = 0.0;
    bool have = false;
    long long nodes = 0;
    std::uint32_t used = 0;
    int quantity = 0;

    Search(const Menu& m, std::span<const double> weights, int forced_idx)
        : menu(m), w(weights), forced(forced_idx) {
        const int n = menu.size();
        suffix_gain.assign(n + 1, 0.0);
        for (int i = n - 1; i >= 0; --i)
            suffix_gain[i] = suffix_gain[i + 1] + std::max(w[i], 0.0);
    }

    void offer(double acc) {
        if (!have || acc > best || (acc == best && cur < best_sel)) {
            best = acc;
            best_sel = cur;
            have = true;
        }
    }

    bool can_take(int i) const {
        const Bundle& b = menu.bundle(i);
        if (menu.mode() == Feasibility::Disjoint) return (used & b.mask()) == 0;
        return quantity + b.size() <= menu.items();
    }

    void take(int i) {
        cur.push_back(i);
        used |= menu.bundle(i).mask();
        quantity += menu.bundle(i).size();
    }

    void drop(int i) {
        cur.pop_back();
        used &= ~menu.bundle(i).mask();
        quantity -= menu.bundle(i).size();
    }

    void dfs(int next, double acc, bool satisfied) {
        ++nodes;
        if (satisfied) offer(acc);
        for (int i = next; i < menu.size(); ++i) {
            if (!satisfied && i > forced) break;  // forced index can no longer be added
            if (have && acc + suffix_gain[i] < best) break;
            if (!can_take(i)) continue;
            take(i);
            dfs(i + 1, acc + w[i], satisfied || i == forced);
            drop(i);
        }
    }
};

void check_inputs(const Menu& menu, std::span<const double> weights, int menu_cap) {
    if (menu.size() > menu_cap) throw SizeError("solve_wdp: menu size exceeds solver cap");
    if (static_cast<int>(weights.size()) != menu.size())
        throw ParamError("solve_wdp: one weight per menu bundle required");
    for (double x : weights)
        if (!std::isfinite(x)) throw ParamError("solve_wdp: weights must be finite");
}

}  // namespace

WdpResult solve_wdp(const Menu& menu, std::span<const double> weights, int menu_cap) {
    check_inputs(menu, weights, menu_cap);
    Search s(menu, weights, -1);
    s.dfs(0, 0.0, true);
    return {std::move(s.best_sel), s.best, s.nodes};
}

WdpResult solve_wdp_containing(const Menu& menu, std::span<const double> weights, int forced,
                               int menu_cap) {
    check_inputs(menu, weights, menu_cap);
    if (forced < 0 || forced >= menu.size())
        throw ParamError("solve_wdp_containing: forced index out of range");
    Search s(menu, weights, forced);
    s.dfs(0, 0.0, false);
    return {std::move(s.best_sel), s.best, s.nodes};
}

}  // namespace casa
