#pragma once

#include <span>
#include <vector>

#include "casa/surplus.hpp"
#include "casa/wdp.hpp"

namespace casa::reference {

// Brute-force reference implementations. Deliberately different algorithms
// from the production solvers; used by the verification suites and unit
// tests as independent oracles. Desk scale only.

// Winner determination by plain enumeration of all feasible selections,
// same lexicographic tie rule as solve_wdp.
WdpResult wdp_by_enumeration(const Menu& menu, std::span<const double> weights,
                             int menu_cap = 20);

// Max-weight injective row->column assignment by trying every permutation
// (rows <= 8).
double best_assignment_by_permutation(const std::vector<std::vector<double>>& value);

// Efficient surplus by enumerating selections and permuting assignments.
Allocation efficient_surplus_by_enumeration(const ValuationProfile& v, const Menu& menu,
                                            int menu_cap = 20);

}  // namespace casa::reference
