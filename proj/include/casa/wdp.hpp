#pragma once

#include <span>
#include <vector>

#include "casa/menu.hpp"

namespace casa {

struct WdpResult {
    std::vector<int> selection;  // ascending bundle indices
    double objective = 0.0;
    long long nodes = 0;  // search nodes visited
};

// Exact winner determination: the feasible selection maximizing the total
// weight. Ties are broken toward the lexicographically smallest index set,
// so results are reproducible. Depth-first branch and bound; weights must
// be finite.
WdpResult solve_wdp(const Menu& menu, std::span<const double> weights, int menu_cap = 24);

// Same, restricted to selections that contain `forced`.
WdpResult solve_wdp_containing(const Menu& menu, std::span<const double> weights, int forced,
                               int menu_cap = 24);

}  // namespace casa
