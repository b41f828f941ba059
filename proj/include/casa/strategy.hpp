#pragma once

#include <memory>
#include <string>
#include <vector>

#include "casa/engine.hpp"
#include "casa/rng.hpp"

namespace casa {

// Behavior contract for bidding agents. act() must return an action that
// passes validate_action for the given observation, and must be a
// deterministic function of the observation sequence and the RNG stream.
class Strategy {
public:
    virtual ~Strategy() = default;
    virtual void reset() {}
    virtual Action act(const Observation& obs, Rng& rng) = 0;
    virtual std::string name() const = 0;
};

using StrategyPtr = std::unique_ptr<Strategy>;

// Re-bids every led bundle at its current price; raises a minimal increment
// on the surplus-maximizing bundle whose value clears the next grid step by
// more than `margin` (ties: lowest menu index); quits only when nothing
// clears and it leads nothing.
StrategyPtr make_straightforward(double margin = 0.0);

// Like straightforward, but raises toward the grid point nearest
// fraction * value (never above own value, never below a minimal raise).
StrategyPtr make_jump_bidder(double fraction);

// Behaves like straightforward except on one target bundle, where it bids
// as if its value were max(value, cap) - i.e. above true value, up to cap.
StrategyPtr make_spoiler(int target_bundle, double cap);

struct NonStrategicPolicy {
    enum class Kind { QuitImmediately, QuitAfter, RandomWalk };
    Kind kind = Kind::QuitImmediately;
    int quit_after = 0;       // QuitAfter: own turns played before quitting
    double quit_prob = 0.15;  // RandomWalk
    double raise_prob = 0.8;  // RandomWalk
};

// Rule-abiding but otherwise arbitrary behavior, including quits while
// surplus remains. Used to stress the guarantees with irrational bidders.
StrategyPtr make_non_strategic(NonStrategicPolicy policy);

// Plays a fixed action list; once exhausted, re-bids its leads or quits.
StrategyPtr make_scripted(std::vector<Action> actions);

namespace detail {
// Minimal-increment ascending decision shared with the coalition agents.
// `blocked` marks bundles to treat as already secured (no raise needed).
Action ascending_bid_decision(const Observation& obs, const std::vector<double>& eff_values,
                              const std::vector<std::uint8_t>* blocked, double margin);
}  // namespace detail

}  // namespace casa
