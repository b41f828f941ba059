#include "casa/engine.hpp"

#include <iostream>

#include "casa/errors.hpp"
#include "casa/wdp.hpp"

namespace casa {

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::Ok: return "ok";
        case Rule::InactiveBidder: return "inactive-bidder";
        case Rule::QuitWhileLeading: return "quit-while-leading";
        case Rule::EmptyBid: return "empty-bid";
        case Rule::BadBundleIndex: return "bad-bundle-index";
        case Rule::DuplicateBundle: return "duplicate-bundle";
        case Rule::OffGridPrice: return "off-grid-price";
        case Rule::LedBundleMissing: return "led-bundle-missing";
        case Rule::LedBundleLowered: return "led-bundle-lowered";
        case Rule::MissingIncrement: return "missing-increment";
    }
    return "?";
}

AuctionState new_auction(const Menu& menu, const PriceGrid& grid, int n_bidders,
                         bool enforce_bidder_count) {
    (void)grid;
    if (n_bidders < 1) throw ParamError("new_auction: need at least one bidder");
    if (n_bidders < menu.size() + 1) {
        if (enforce_bidder_count)
            throw ParamError("new_auction: bidder count below menu size + 1");
        std::cerr << "casa: warning: " << n_bidders << " bidders with a menu of "
                  << menu.size() << " bundles (below menu size + 1)\n";
    }
    AuctionState s;
    s.n_bidders = n_bidders;
    s.price_ticks.assign(menu.size(), 0);
    s.leader.assign(menu.size(), -1);
    s.active.assign(n_bidders, 1);
    return s;
}

Validation validate_action(const AuctionState& s, const Menu& menu, const PriceGrid& grid,
                           int bidder, const Action& a) {
    if (bidder < 0 || bidder >= s.n_bidders || !s.active[bidder])
        return {Rule::InactiveBidder, "bidder " + std::to_string(bidder) + " is not active"};

    if (a.is_quit()) {
        if (s.leads_any(bidder))
            return {Rule::QuitWhileLeading, "leading bids are binding; a leader cannot quit"};
        return {};
    }

    if (a.bids.empty()) return {Rule::EmptyBid, "a bid must name at least one bundle"};

    std::vector<char> in_bid(menu.size(), 0);
    for (const BidPair& bp : a.bids) {
        if (bp.bundle < 0 || bp.bundle >= menu.size())
            return {Rule::BadBundleIndex, "bundle index " + std::to_string(bp.bundle)};
        if (in_bid[bp.bundle])
            return {Rule::DuplicateBundle, "bundle " + std::to_string(bp.bundle) + " repeated"};
        in_bid[bp.bundle] = 1;
        if (!grid.valid_tick(bp.ticks))
            return {Rule::OffGridPrice, "tick " + std::to_string(bp.ticks) + " off the grid"};
        const int cur = s.price_ticks[bp.bundle];
        if (s.leader[bp.bundle] == bidder) {
            if (bp.ticks < cur)
                return {Rule::LedBundleLowered,
                        "bundle " + std::to_string(bp.bundle) + " re-bid below leading price"};
        } else {
            if (bp.ticks < cur + 1)
                return {Rule::MissingIncrement,
                        "bundle " + std::to_string(bp.bundle) + " needs a strictly higher bid"};
        }
    }
    for (int b = 0; b < menu.size(); ++b)
        if (s.leader[b] == bidder && !in_bid[b])
            return {Rule::LedBundleMissing,
                    "bundle " + std::to_string(b) + " is led by the bidder and must be re-bid"};
    return {};
}

AuctionState apply_action(AuctionState s, int bidder, const Action& a) {
    bool changed = false;
    if (!a.is_quit()) {
        for (const BidPair& bp : a.bids) {
            if (s.price_ticks[bp.bundle] != bp.ticks) changed = true;
            s.price_ticks[bp.bundle] = bp.ticks;
            s.leader[bp.bundle] = bidder;
        }
    } else {
        s.active[bidder] = 0;
    }
    s.quiet_stages = changed ? 0 : s.quiet_stages + 1;
    s.last_mover = bidder;
    ++s.stage;
    return s;
}

bool is_terminated(const AuctionState& s) {
    return s.quiet_stages >= s.n_bidders || s.active_count() == 0;
}

std::optional<int> next_mover(const AuctionState& s) {
    if (is_terminated(s)) return std::nullopt;
    const int n = static_cast<int>(s.active.size());
    for (int step = 1; step <= n; ++step) {
        const int cand = (s.last_mover + step + n) % n;
        if (s.active[cand]) return cand;
    }
    return std::nullopt;
}

Observation observe(const AuctionState& s, const Menu& menu, const PriceGrid& grid,
                    const ValuationProfile& v, int bidder, bool wide) {
    Observation o;
    o.bidder = bidder;
    o.n_bidders = s.n_bidders;
    o.menu = &menu;
    o.grid = &grid;
    o.price_ticks = s.price_ticks;
    o.my_leading.assign(menu.size(), 0);
    for (int b = 0; b < menu.size(); ++b)
        if (s.leader[b] == bidder) o.my_leading[b] = 1;
    o.my_values.resize(menu.size());
    for (int b = 0; b < menu.size(); ++b) o.my_values[b] = v.value(bidder, menu.bundle(b));
    if (wide) o.active_bidders = s.active_count();
    return o;
}

Outcome settle(const AuctionState& s, const Menu& menu, const PriceGrid& grid,
               const ValuationProfile& v) {
    if (!is_terminated(s)) throw ParamError("settle: auction not terminated");

    // Leaderless bundles always sit at price 0; drop them before solving so
    // the lexicographic tie rule only ranks sellable bundles.
    std::vector<int> led;
    for (int b = 0; b < menu.size(); ++b)
        if (s.leader[b] >= 0) led.push_back(b);

    Outcome out;
    out.utility.assign(s.n_bidders, 0.0);
    if (led.empty()) return out;

    std::vector<Bundle> led_bundles;
    std::vector<double> weights;
    for (int b : led) {
        led_bundles.push_back(menu.bundle(b));
        weights.push_back(static_cast<double>(s.price_ticks[b]));
    }
    const Menu led_menu(menu.items(), led_bundles, menu.mode());
    const WdpResult w = solve_wdp(led_menu, weights, led_menu.size());

    std::vector<Bundle> won_union(s.n_bidders);
    for (int i : w.selection) {
        const int b = led[i];
        out.selection.push_back(b);
        out.winner.push_back(s.leader[b]);
        out.payment_ticks.push_back(s.price_ticks[b]);
        out.revenue_ticks += s.price_ticks[b];
        won_union[s.leader[b]] = won_union[s.leader[b]].unite(menu.bundle(b));
        out.utility[s.leader[b]] -= grid.price(s.price_ticks[b]);
    }
    for (int n = 0; n < s.n_bidders; ++n)
        if (!won_union[n].empty()) out.utility[n] += v.value(n, won_union[n]);
    out.revenue = static_cast<double>(out.revenue_ticks) * grid.epsilon();
    return out;
}

}  // namespace casa
