#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "casa/grid.hpp"
#include "casa/menu.hpp"
#include "casa/valuation.hpp"

namespace casa {

// Auction state. Invariants maintained by apply_action:
//   - price ticks are componentwise non-decreasing over stages,
//   - a bundle with no leader has price 0,
//   - quit bidders never re-enter the active set,
//   - quiet_stages counts consecutive stages with an unchanged price vector.
struct AuctionState {
    int n_bidders = 0;
    int stage = 0;
    std::vector<int> price_ticks;       // per bundle
    std::vector<int> leader;            // per bundle; -1 = none
    std::vector<std::uint8_t> active;   // per bidder
    int quiet_stages = 0;
    int last_mover = -1;

    int active_count() const {
        int c = 0;
        for (auto a : active) c += a ? 1 : 0;
        return c;
    }
    bool leads_any(int bidder) const {
        for (int l : leader)
            if (l == bidder) return true;
        return false;
    }
};

struct BidPair {
    int bundle = 0;
    int ticks = 0;
    friend bool operator==(const BidPair&, const BidPair&) = default;
};

// Either Quit or a non-empty set of bundle/price pairs.
struct Action {
    enum class Kind { Quit, Bid };
    Kind kind = Kind::Quit;
    std::vector<BidPair> bids;

    static Action quit() { return {}; }
    static Action bid(std::vector<BidPair> bs) { return {Kind::Bid, std::move(bs)}; }
    bool is_quit() const { return kind == Kind::Quit; }
    friend bool operator==(const Action&, const Action&) = default;
};

// What a mover sees: current prices, the bundles it leads, and its own
// static data. No other bidder's identity or valuation appears here; the
// active-bidder count is filled only when wide observation is enabled.
struct Observation {
    int bidder = 0;
    int n_bidders = 0;
    const Menu* menu = nullptr;
    const PriceGrid* grid = nullptr;
    std::vector<int> price_ticks;
    std::vector<std::uint8_t> my_leading;
    std::vector<double> my_values;  // per menu bundle
    std::optional<int> active_bidders;

    double price(int i) const { return grid->price(price_ticks[i]); }
    bool leads_any() const {
        for (auto l : my_leading)
            if (l) return true;
        return false;
    }
};

enum class Rule {
    Ok,
    InactiveBidder,
    QuitWhileLeading,
    EmptyBid,
    BadBundleIndex,
    DuplicateBundle,
    OffGridPrice,
    LedBundleMissing,
    LedBundleLowered,
    MissingIncrement,
};

const char* rule_name(Rule r);

struct Validation {
    Rule rule = Rule::Ok;
    std::string detail;
    bool ok() const { return rule == Rule::Ok; }
};

// Final allocation and payments (pay-as-bid).
struct Outcome {
    std::vector<int> selection;      // winning bundle indices, ascending
    std::vector<int> winner;         // per selected bundle
    std::vector<int> payment_ticks;  // per selected bundle
    long long revenue_ticks = 0;
    double revenue = 0.0;
    std::vector<double> utility;  // per bidder: v(union of won bundles) - payments

    friend bool operator==(const Outcome&, const Outcome&) = default;
};

// Canonical initial state: zero prices, no leaders, everyone active.
// The bidder-count assumption N >= |menu| + 1 is a warning by default and a
// hard ParamError when enforce_bidder_count is set.
AuctionState new_auction(const Menu& menu, const PriceGrid& grid, int n_bidders,
                         bool enforce_bidder_count = false);

Validation validate_action(const AuctionState& s, const Menu& menu, const PriceGrid& grid,
                           int bidder, const Action& a);

// Pre: the action validated. Returns the updated state.
AuctionState apply_action(AuctionState s, int bidder, const Action& a);

bool is_terminated(const AuctionState& s);

// Active bidders cycle in ascending index order; nullopt once terminated.
std::optional<int> next_mover(const AuctionState& s);

Observation observe(const AuctionState& s, const Menu& menu, const PriceGrid& grid,
                    const ValuationProfile& v, int bidder, bool wide = false);

// Pre: is_terminated(s). Winner determination over the led bundles at final
// prices; each selected bundle goes to its leading bidder at its leading
// price. Leaderless bundles (price 0) are excluded up front so they cannot
// enter selection ties.
Outcome settle(const AuctionState& s, const Menu& menu, const PriceGrid& grid,
               const ValuationProfile& v);

}  // namespace casa
