#pragma once

#include <json.hpp>

#include "casa/engine.hpp"
#include "casa/grid.hpp"
#include "casa/menu.hpp"
#include "casa/valuation.hpp"

namespace casa {

// JSON encodings shared by transcripts, scenario configs, and reports.
// Bundles serialize as ascending item-index arrays.

nlohmann::json to_json(const Bundle& b);
Bundle bundle_from_json(const nlohmann::json& j, int n_items);

nlohmann::json to_json(const Menu& m);
Menu menu_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PriceGrid& g);
PriceGrid grid_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ValuationProfile& v);
ValuationProfile valuation_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Outcome& o);
Outcome outcome_from_json(const nlohmann::json& j);

}  // namespace casa
