#include "casa/serialize.hpp"

#include "casa/errors.hpp"

namespace casa {

using nlohmann::json;

json to_json(const Bundle& b) { return json(b.items()); }

Bundle bundle_from_json(const json& j, int n_items) {
    if (!j.is_array()) throw ParamError("bundle: expected an array of item indices");
    Bundle b;
    for (const auto& e : j) {
        const int item = e.get<int>();
        if (item < 0 || item >= n_items) throw ParamError("bundle: item index out of range");
        b = b.unite(Bundle({item}));
    }
    return b;
}

json to_json(const Menu& m) {
    json bundles = json::array();
    for (const Bundle& b : m.bundles()) bundles.push_back(to_json(b));
    return json{{"items", m.items()},
                {"bundles", bundles},
                {"mode", m.mode() == Feasibility::Disjoint ? "disjoint" : "quantity-cap"}};
}

Menu menu_from_json(const json& j) {
    const int items = j.at("items").get<int>();
    std::vector<Bundle> bundles;
    for (const auto& b : j.at("bundles")) bundles.push_back(bundle_from_json(b, items));
    Feasibility mode = Feasibility::Disjoint;
    if (j.contains("mode")) {
        const std::string m = j.at("mode").get<std::string>();
        if (m == "disjoint")
            mode = Feasibility::Disjoint;
        else if (m == "quantity-cap")
            mode = Feasibility::QuantityCap;
        else
            throw ParamError("menu: unknown mode '" + m + "'");
    }
    return Menu(items, std::move(bundles), mode);
}

json to_json(const PriceGrid& g) {
    return json{{"epsilon", g.epsilon()}, {"max_price", g.max_price()}};
}

PriceGrid grid_from_json(const json& j) {
    return PriceGrid(j.at("epsilon").get<double>(), j.at("max_price").get<double>());
}

json to_json(const ValuationProfile& v) {
    json bidders = json::array();
    for (int n = 0; n < v.bidders(); ++n) {
        json entries = json::array();
        for (const auto& [mask, value] : v.entries(n))
            entries.push_back(json{{"bundle", to_json(Bundle(mask))}, {"value", value}});
        bidders.push_back(entries);
    }
    return json{{"bidders", v.bidders()},
                {"items", v.items()},
                {"v_lo", v.v_lo()},
                {"v_hi", v.v_hi()},
                {"values", bidders}};
}

ValuationProfile valuation_from_json(const json& j) {
    ValuationProfile v(j.at("bidders").get<int>(), j.at("items").get<int>(),
                       j.at("v_lo").get<double>(), j.at("v_hi").get<double>());
    const auto& values = j.at("values");
    if (static_cast<int>(values.size()) != v.bidders())
        throw ParamError("valuations: one entry list per bidder required");
    for (int n = 0; n < v.bidders(); ++n)
        for (const auto& e : values[n])
            v.set(n, bundle_from_json(e.at("bundle"), v.items()), e.at("value").get<double>());
    return v;
}

json to_json(const Outcome& o) {
    return json{{"selection", o.selection},
                {"winner", o.winner},
                {"payment_ticks", o.payment_ticks},
                {"revenue_ticks", o.revenue_ticks},
                {"revenue", o.revenue},
                {"utility", o.utility}};
}

Outcome outcome_from_json(const json& j) {
    Outcome o;
    o.selection = j.at("selection").get<std::vector<int>>();
    o.winner = j.at("winner").get<std::vector<int>>();
    o.payment_ticks = j.at("payment_ticks").get<std::vector<int>>();
    o.revenue_ticks = j.at("revenue_ticks").get<long long>();
    o.revenue = j.at("revenue").get<double>();
    o.utility = j.at("utility").get<std::vector<double>>();
    return o;
}

}  // namespace casa
