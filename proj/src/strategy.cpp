#include "casa/strategy.hpp"

#include <algorithm>
#include <functional>

namespace casa {
namespace {

// Shared skeleton of the ascending-bid family. `blocked` marks bundles the
// caller treats as already secured (used by coalitions); `raise_to` maps a
// candidate bundle to the tick it should be raised to (>= current + 1).
Action ascending_decision(const Observation& obs, const std::vector<double>& eff_values,
                          const std::vector<std::uint8_t>* blocked, double margin,
                          const std::function<int(int, int)>& raise_to) {
    const PriceGrid& grid = *obs.grid;
    const int m = static_cast<int>(obs.price_ticks.size());

    int pick = -1;
    double pick_surplus = 0.0;
    for (int b = 0; b < m; ++b) {
        if (obs.my_leading[b]) continue;
        if (blocked && (*blocked)[b]) continue;
        const int next_tick = obs.price_ticks[b] + 1;
        if (!grid.valid_tick(next_tick)) continue;
        const double surplus = eff_values[b] - grid.price(next_tick);
        if (surplus > margin && (pick < 0 || surplus > pick_surplus)) {
            pick = b;
            pick_surplus = surplus;
        }
    }

    std::vector<BidPair> bids;
    for (int b = 0; b < m; ++b)
        if (obs.my_leading[b]) bids.push_back({b, obs.price_ticks[b]});
    if (pick >= 0) {
        int target = raise_to(pick, obs.price_ticks[pick]);
        target = std::max(target, obs.price_ticks[pick] + 1);
        target = std::min(target, grid.max_ticks());
        bids.push_back({pick, target});
    }
    if (bids.empty()) return Action::quit();
    return Action::bid(std::move(bids));
}

int minimal_raise(int /*bundle*/, int cur) { return cur + 1; }

class Straightforward final : public Strategy {
public:
    explicit Straightforward(double margin) : margin_(margin) {}
    Action act(const Observation& obs, Rng&) override {
        return ascending_decision(obs, obs.my_values, nullptr, margin_, minimal_raise);
    }
    std::string name() const override { return "straightforward"; }

private:
    double margin_;
};

class JumpBidder final : public Strategy {
public:
    explicit JumpBidder(double fraction) : fraction_(fraction) {}
    Action act(const Observation& obs, Rng&) override {
        auto raise = [&](int bundle, int cur) {
            const PriceGrid& grid = *obs.grid;
            int target = grid.nearest_ticks(fraction_ * obs.my_values[bundle]);
            // never above own value; never below a minimal raise
            target = std::min(target, grid.floor_ticks(obs.my_values[bundle]));
            return std::max(target, cur + 1);
        };
        return ascending_decision(obs, obs.my_values, nullptr, 0.0, raise);
    }
    std::string name() const override { return "jump"; }

private:
    double fraction_;
};

class Spoiler final : public Strategy {
public:
    Spoiler(int target, double cap) : target_(target), cap_(cap) {}
    Action act(const Observation& obs, Rng&) override {
        std::vector<double> eff = obs.my_values;
        if (target_ >= 0 && target_ < static_cast<int>(eff.size()))
            eff[target_] = std::max(eff[target_], cap_);
        return ascending_decision(obs, eff, nullptr, 0.0, minimal_raise);
    }
    std::string name() const override { return "spoiler"; }

private:
    int target_;
    double cap_;
};

class NonStrategic final : public Strategy {
public:
    explicit NonStrategic(NonStrategicPolicy p) : policy_(p) {}
    void reset() override { turns_ = 0; }

    Action act(const Observation& obs, Rng& rng) override {
        const int my_turn = turns_++;
        std::vector<BidPair> rebids;
        for (int b = 0; b < static_cast<int>(obs.my_leading.size()); ++b)
            if (obs.my_leading[b]) rebids.push_back({b, obs.price_ticks[b]});
        const bool leading = !rebids.empty();

        switch (policy_.kind) {
            case NonStrategicPolicy::Kind::QuitImmediately:
                if (!leading) return Action::quit();
                return Action::bid(std::move(rebids));
            case NonStrategicPolicy::Kind::QuitAfter:
                if (my_turn >= policy_.quit_after && !leading) return Action::quit();
                break;
            case NonStrategicPolicy::Kind::RandomWalk:
                if (!leading && rng.bernoulli(policy_.quit_prob)) return Action::quit();
                break;
        }

        // maybe raise one random bundle, staying at or below own value
        std::vector<int> cands;
        for (int b = 0; b < static_cast<int>(obs.price_ticks.size()); ++b) {
            if (obs.my_leading[b]) continue;
            const int next_tick = obs.price_ticks[b] + 1;
            if (obs.grid->valid_tick(next_tick) &&
                obs.grid->price(next_tick) <= obs.my_values[b])
                cands.push_back(b);
        }
        const bool want_raise =
            !cands.empty() && (policy_.kind != NonStrategicPolicy::Kind::RandomWalk ||
                               rng.bernoulli(policy_.raise_prob));
        if (want_raise) {
            const int b = cands[rng.below(cands.size())];
            rebids.push_back({b, obs.price_ticks[b] + 1});
            return Action::bid(std::move(rebids));
        }
        if (leading) return Action::bid(std::move(rebids));
        return Action::quit();
    }
    std::string name() const override { return "nonstrategic"; }

private:
    NonStrategicPolicy policy_;
    int turns_ = 0;
};

class Scripted final : public Strategy {
public:
    explicit Scripted(std::vector<Action> actions) : actions_(std::move(actions)) {}
    void reset() override { cursor_ = 0; }

    Action act(const Observation& obs, Rng&) override {
        if (cursor_ < actions_.size()) return actions_[cursor_++];
        std::vector<BidPair> rebids;
        for (int b = 0; b < static_cast<int>(obs.my_leading.size()); ++b)
            if (obs.my_leading[b]) rebids.push_back({b, obs.price_ticks[b]});
        if (rebids.empty()) return Action::quit();
        return Action::bid(std::move(rebids));
    }
    std::string name() const override { return "scripted"; }

private:
    std::vector<Action> actions_;
    std::size_t cursor_ = 0;
};

}  // namespace

StrategyPtr make_straightforward(double margin) {
    return std::make_unique<Straightforward>(margin);
}

StrategyPtr make_jump_bidder(double fraction) { return std::make_unique<JumpBidder>(fraction); }

StrategyPtr make_spoiler(int target_bundle, double cap) {
    return std::make_unique<Spoiler>(target_bundle, cap);
}

StrategyPtr make_non_strategic(NonStrategicPolicy policy) {
    return std::make_unique<NonStrategic>(policy);
}

StrategyPtr make_scripted(std::vector<Action> actions) {
    return std::make_unique<Scripted>(std::move(actions));
}

namespace detail {
Action ascending_bid_decision(const Observation& obs, const std::vector<double>& eff_values,
                              const std::vector<std::uint8_t>* blocked, double margin) {
    return ascending_decision(obs, eff_values, blocked, margin, minimal_raise);
}
}  // namespace detail

}  // namespace casa
