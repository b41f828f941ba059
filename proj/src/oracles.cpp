#include "casa/oracles.hpp"

#include "casa/errors.hpp"

namespace casa::reference {

WdpResult wdp_by_enumeration(const Menu& menu, std::span<const double> weights, int menu_cap) {
    if (static_cast<int>(weights.size()) != menu.size())
        throw ParamError("wdp_by_enumeration: one weight per bundle required");
    WdpResult best;
    bool have = false;
    for_each_feasible(
        menu,
        [&](const std::vector<int>& sel) {
            ++best.nodes;
            double obj = 0.0;
            for (int i : sel) obj += weights[i];
            if (!have || obj > best.objective ||
                (obj == best.objective && sel < best.selection)) {
                best.objective = obj;
                best.selection = sel;
                have = true;
            }
        },
        menu_cap);
    return best;
}

double best_assignment_by_permutation(const std::vector<std::vector<double>>& value) {
    const int rows = static_cast<int>(value.size());
    if (rows == 0) return 0.0;
    const int cols = static_cast<int>(value[0].size());
    if (rows > cols) throw InfeasibleError("best_assignment_by_permutation: rows > cols");
    if (rows > 8) throw SizeError("best_assignment_by_permutation: too many rows");

    double best = 0.0;
    bool have = false;
    std::vector<char> used(cols, 0);
    auto rec = [&](auto&& self, int r, double acc) -> void {
        if (r == rows) {
            if (!have || acc > best) {
                best = acc;
                have = true;
            }
            return;
        }
        for (int c = 0; c < cols; ++c) {
            if (used[c]) continue;
            used[c] = 1;
            self(self, r + 1, acc + value[r][c]);
            used[c] = 0;
        }
    };
    rec(rec, 0, 0.0);
    return best;
}

Allocation efficient_surplus_by_enumeration(const ValuationProfile& v, const Menu& menu,
                                            int menu_cap) {
    Allocation best;
    bool have = false;
    for_each_feasible(
        menu,
        [&](const std::vector<int>& sel) {
            if (static_cast<int>(sel.size()) > v.bidders()) return;
            std::vector<std::vector<double>> value(sel.size(),
                                                   std::vector<double>(v.bidders()));
            for (std::size_t r = 0; r < sel.size(); ++r)
                for (int n = 0; n < v.bidders(); ++n)
                    value[r][n] = v.value(n, menu.bundle(sel[r]));
            const double total = best_assignment_by_permutation(value);
            if (!have || total > best.value || (total == best.value && sel < best.selection)) {
                best.selection = sel;
                best.value = total;
                best.bidder_of.assign(sel.size(), -1);
                have = true;
            }
        },
        menu_cap);
    return best;
}

}  // namespace casa::reference
