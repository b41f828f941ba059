#pragma once

#include "casa/engine.hpp"

namespace casa {

enum class DominanceSearch {
    // Raise one candidate bundle's price alone to the largest grid point
    // below its value and test whether it enters some optimum. Sound: a hit
    // proves the quit obviously dominated. A miss proves nothing.
    Witness,
    // Additionally search joint raises over a coarsened per-bundle price
    // ladder (menus of up to 4 bundles). Catches bundles that only become
    // winning after a partner bundle is raised too.
    Exhaustive,
};

// True iff quitting at this observation is provably obviously dominated:
// there is a grid price vector p' >= p and a bundle b in some revenue
// maximizer at p' with value > p'_b > p_b. Pre: the observer leads nothing.
bool quit_is_obviously_dominated(const Observation& obs,
                                 DominanceSearch mode = DominanceSearch::Witness,
                                 int exhaustive_menu_cap = 4, int ladder_levels = 8);

}  // namespace casa
