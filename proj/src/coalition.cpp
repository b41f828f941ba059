#include "casa/coalition.hpp"

#include <algorithm>
#include <memory>

#include "casa/errors.hpp"

namespace casa {

void CoalitionSpec::validate(int n_bidders) const {
    std::vector<char> seen(n_bidders, 0);
    for (const auto& g : groups) {
        if (g.empty()) throw ParamError("CoalitionSpec: empty group");
        for (int n : g) {
            if (n < 0 || n >= n_bidders) throw ParamError("CoalitionSpec: bidder out of range");
            if (seen[n]) throw ParamError("CoalitionSpec: bidder in two groups");
            seen[n] = 1;
        }
    }
    for (int n = 0; n < n_bidders; ++n)
        if (!seen[n]) throw ParamError("CoalitionSpec: bidder missing from partition");
}

std::vector<int> CoalitionSpec::sizes_desc() const {
    std::vector<int> sizes;
    for (const auto& g : groups) sizes.push_back(static_cast<int>(g.size()));
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
}

int coalition_rank(const CoalitionSpec& spec, int menu_size) {
    const std::vector<int> sizes = spec.sizes_desc();
    int k = 1;
    for (int i = 0; i < menu_size && i < static_cast<int>(sizes.size()); ++i) k += sizes[i];
    return k;
}

namespace {

// Shared per-group blackboard. led_tick[b] records the price tick at which
// some member last led bundle b; since prices never revisit a level, the
// record is current leadership iff it equals the observed price.
struct Board {
    std::vector<double> pooled;  // per-bundle max of member values
    std::vector<int> led_tick;

    void reset() { std::fill(led_tick.begin(), led_tick.end(), -1); }
};

class CoalitionMember final : public Strategy {
public:
    CoalitionMember(std::shared_ptr<Board> board) : board_(std::move(board)) {}

    void reset() override { board_->reset(); }

    Action act(const Observation& obs, Rng&) override {
        const int m = static_cast<int>(obs.price_ticks.size());
        for (int b = 0; b < m; ++b)
            if (obs.my_leading[b]) board_->led_tick[b] = obs.price_ticks[b];
        std::vector<std::uint8_t> secured(m, 0);
        for (int b = 0; b < m; ++b)
            if (!obs.my_leading[b] && board_->led_tick[b] == obs.price_ticks[b] &&
                board_->led_tick[b] >= 0)
                secured[b] = 1;
        const Action a = detail::ascending_bid_decision(obs, board_->pooled, &secured, 0.0);
        // record outgoing bids so the next member to move sees them as ours;
        // the engine aborts on invalid actions, so intent equals effect
        if (!a.is_quit())
            for (const BidPair& bp : a.bids) board_->led_tick[bp.bundle] = bp.ticks;
        return a;
    }

    std::string name() const override { return "coalition"; }

private:
    std::shared_ptr<Board> board_;
};

}  // namespace

std::vector<StrategyPtr> make_coalition_members(const std::vector<int>& group,
                                                const ValuationProfile& v, const Menu& menu) {
    if (group.empty()) throw ParamError("make_coalition_members: empty group");
    auto board = std::make_shared<Board>();
    board->pooled.assign(menu.size(), 0.0);
    board->led_tick.assign(menu.size(), -1);
    for (int b = 0; b < menu.size(); ++b)
        for (int n : group)
            board->pooled[b] = std::max(board->pooled[b], v.value(n, menu.bundle(b)));
    std::vector<StrategyPtr> out;
    out.reserve(group.size());
    for (std::size_t i = 0; i < group.size(); ++i)
        out.push_back(std::make_unique<CoalitionMember>(board));
    return out;
}

std::vector<StrategyPtr> make_coalition_profile(const CoalitionSpec& spec,
                                                const ValuationProfile& v, const Menu& menu) {
    spec.validate(v.bidders());
    std::vector<StrategyPtr> out(v.bidders());
    for (const auto& group : spec.groups) {
        auto members = make_coalition_members(group, v, menu);
        for (std::size_t i = 0; i < group.size(); ++i) out[group[i]] = std::move(members[i]);
    }
    return out;
}

}  // namespace casa
