#include "casa/surplus.hpp"

#include "casa/errors.hpp"

namespace casa {

Allocation efficient_surplus(const ValuationProfile& v, const Menu& menu, int menu_cap,
                             int exclude_bidder) {
    std::vector<int> columns;  // bidder per matrix column
    for (int n = 0; n < v.bidders(); ++n)
        if (n != exclude_bidder) columns.push_back(n);
    if (columns.empty()) throw ParamError("efficient_surplus: no bidders left");

    Allocation best;
    bool have = false;
    for_each_feasible(
        menu,
        [&](const std::vector<int>& sel) {
            if (sel.size() > columns.size()) return;
            std::vector<std::vector<double>> value(sel.size(),
                                                   std::vector<double>(columns.size()));
            for (std::size_t r = 0; r < sel.size(); ++r) {
                const Bundle& b = menu.bundle(sel[r]);
                for (std::size_t c = 0; c < columns.size(); ++c)
                    value[r][c] = v.value(columns[c], b);
            }
            AssignmentResult m = max_weight_assignment(value);
            if (!have || m.total > best.value ||
                (m.total == best.value && sel < best.selection)) {
                best.selection = sel;
                best.bidder_of.resize(sel.size());
                for (std::size_t r = 0; r < sel.size(); ++r)
                    best.bidder_of[r] = columns[m.column_of[r]];
                best.value = m.total;
                have = true;
            }
        },
        menu_cap);
    return best;
}

Allocation complete_menu_surplus(const ValuationProfile& v, Feasibility mode) {
    if (v.items() > 5)
        throw SizeError("complete_menu_surplus: complete menu supported up to 5 items");
    const Menu full = Menu::complete(v.items(), mode);
    return efficient_surplus(v, full, full.size());
}

}  // namespace casa
