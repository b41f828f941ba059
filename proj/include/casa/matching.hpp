#pragma once

#include <vector>

#include "casa/menu.hpp"
#include "casa/valuation.hpp"

namespace casa {

struct AssignmentResult {
    std::vector<int> column_of;  // per row: assigned column
    double total = 0.0;
};

// Max-weight assignment of each row to a distinct column (rows <= columns),
// augmenting shortest-path (Hungarian) method on potentials. Deterministic
// for fixed inputs. Throws InfeasibleError when rows > columns.
AssignmentResult max_weight_assignment(const std::vector<std::vector<double>>& value);

// Optimal injective assignment of each selected bundle to a distinct bidder,
// maximizing total value. selection holds menu bundle indices.
AssignmentResult match_bundles_to_bidders(const ValuationProfile& v, const Menu& menu,
                                          const std::vector<int>& selection);

}  // namespace casa
