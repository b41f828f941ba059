#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "casa/engine.hpp"

namespace casa {

struct TranscriptEntry {
    int stage = 0;
    int bidder = 0;
    std::uint64_t digest = 0;  // hash of the mover's observation
    Action action;
    std::vector<int> post_ticks;  // price vector after the action

    friend bool operator==(const TranscriptEntry&, const TranscriptEntry&) = default;
};

// Full action log of one run plus the config snapshot needed to replay it.
// Replaying through the validator reproduces the final state bit-exactly.
struct Transcript {
    Menu menu;
    PriceGrid grid;
    ValuationProfile valuations;
    std::uint64_t seed = 0;
    bool wide_observation = false;

    std::vector<TranscriptEntry> entries;
    AuctionState final_state;
    Outcome outcome;

    Transcript(Menu m, PriceGrid g, ValuationProfile v, std::uint64_t s, bool wide)
        : menu(std::move(m)), grid(g), valuations(std::move(v)), seed(s),
          wide_observation(wide) {}

    // Line-delimited text: a config header, one line per action, an outcome
    // footer. Integer ticks throughout, so serialization is lossless.
    std::string serialize() const;
    static Transcript parse(const std::string& text);
};

std::uint64_t observation_digest(const Observation& o);

struct ReplayReport {
    bool ok = true;
    int line = -1;  // 1-based line of the first mismatch, -1 if none
    std::string detail;
};

// Re-validates every action against a fresh state and recomputes the
// outcome; any divergence is reported with its line.
ReplayReport replay(const Transcript& t);

}  // namespace casa
