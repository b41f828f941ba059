#include "casa/transcript.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

#include "casa/errors.hpp"
#include "casa/serialize.hpp"

namespace casa {

using nlohmann::json;

std::uint64_t observation_digest(const Observation& o) {
    // FNV-1a over the observer-visible fields.
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xffu;
            h *= 0x100000001b3ull;
        }
    };
    mix(static_cast<std::uint64_t>(o.bidder));
    mix(static_cast<std::uint64_t>(o.n_bidders));
    for (int t : o.price_ticks) mix(static_cast<std::uint64_t>(t));
    for (auto l : o.my_leading) mix(l ? 1u : 0u);
    mix(o.active_bidders ? static_cast<std::uint64_t>(*o.active_bidders) + 1 : 0u);
    return h;
}

namespace {

std::string action_text(const Action& a) {
    if (a.is_quit()) return "q";
    std::string s = "b ";
    for (std::size_t i = 0; i < a.bids.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a.bids[i].bundle) + ":" + std::to_string(a.bids[i].ticks);
    }
    return s;
}

int parse_int(const std::string& tok, int line) {
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError("bad integer '" + tok + "'", line);
    return v;
}

std::uint64_t parse_hex(const std::string& tok, int line) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v, 16);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError("bad hex digest '" + tok + "'", line);
    return v;
}

}  // namespace

std::string Transcript::serialize() const {
    std::ostringstream out;
    out << "#casa-transcript v1\n";
    json cfg{{"menu", to_json(menu)},
             {"grid", to_json(grid)},
             {"valuations", to_json(valuations)},
             {"seed", seed},
             {"wide", wide_observation}};
    out << "#config " << cfg.dump() << "\n";
    char hexbuf[17];
    for (const TranscriptEntry& e : entries) {
        std::snprintf(hexbuf, sizeof hexbuf, "%016llx",
                      static_cast<unsigned long long>(e.digest));
        out << "a " << e.stage << " " << e.bidder << " " << hexbuf << " "
            << action_text(e.action) << " ;";
        for (int t : e.post_ticks) out << " " << t;
        out << "\n";
    }
    json fin{{"price_ticks", final_state.price_ticks},
             {"leader", final_state.leader},
             {"active", final_state.active},
             {"quiet_stages", final_state.quiet_stages},
             {"stage", final_state.stage},
             {"last_mover", final_state.last_mover}};
    out << "#final " << fin.dump() << "\n";
    out << "#outcome " << to_json(outcome).dump() << "\n";
    return out.str();
}

Transcript Transcript::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty()) return true;
        }
        return false;
    };

    if (!next_line() || line != "#casa-transcript v1")
        throw ParseError("missing transcript header", lineno == 0 ? 1 : lineno);
    if (!next_line() || line.rfind("#config ", 0) != 0)
        throw ParseError("missing #config line", lineno);

    json cfg;
    try {
        cfg = json::parse(line.substr(8));
    } catch (const json::exception& e) {
        throw ParseError(std::string("config: ") + e.what(), lineno);
    }

    Transcript t(menu_from_json(cfg.at("menu")), grid_from_json(cfg.at("grid")),
                 valuation_from_json(cfg.at("valuations")),
                 cfg.at("seed").get<std::uint64_t>(), cfg.at("wide").get<bool>());

    bool saw_final = false, saw_outcome = false;
    while (next_line()) {
        if (line.rfind("#final ", 0) == 0) {
            json fin;
            try {
                fin = json::parse(line.substr(7));
            } catch (const json::exception& e) {
                throw ParseError(std::string("final: ") + e.what(), lineno);
            }
            t.final_state.n_bidders = t.valuations.bidders();
            t.final_state.price_ticks = fin.at("price_ticks").get<std::vector<int>>();
            t.final_state.leader = fin.at("leader").get<std::vector<int>>();
            t.final_state.active = fin.at("active").get<std::vector<std::uint8_t>>();
            t.final_state.quiet_stages = fin.at("quiet_stages").get<int>();
            t.final_state.stage = fin.at("stage").get<int>();
            t.final_state.last_mover = fin.at("last_mover").get<int>();
            saw_final = true;
            continue;
        }
        if (line.rfind("#outcome ", 0) == 0) {
            try {
                t.outcome = outcome_from_json(json::parse(line.substr(9)));
            } catch (const json::exception& e) {
                throw ParseError(std::string("outcome: ") + e.what(), lineno);
            }
            saw_outcome = true;
            continue;
        }
        if (line.rfind("a ", 0) != 0) throw ParseError("unrecognized line", lineno);

        std::istringstream ls(line.substr(2));
        std::string stage_tok, bidder_tok, digest_tok, kind_tok;
        if (!(ls >> stage_tok >> bidder_tok >> digest_tok >> kind_tok))
            throw ParseError("truncated action line", lineno);
        TranscriptEntry e;
        e.stage = parse_int(stage_tok, lineno);
        e.bidder = parse_int(bidder_tok, lineno);
        e.digest = parse_hex(digest_tok, lineno);
        if (kind_tok == "q") {
            e.action = Action::quit();
        } else if (kind_tok == "b") {
            std::string pairs;
            if (!(ls >> pairs)) throw ParseError("bid without bundle-price pairs", lineno);
            std::vector<BidPair> bids;
            std::size_t pos = 0;
            while (pos < pairs.size()) {
                const std::size_t comma = pairs.find(',', pos);
                const std::string pair =
                    pairs.substr(pos, comma == std::string::npos ? comma : comma - pos);
                const std::size_t colon = pair.find(':');
                if (colon == std::string::npos)
                    throw ParseError("bad bundle:tick pair '" + pair + "'", lineno);
                bids.push_back({parse_int(pair.substr(0, colon), lineno),
                                parse_int(pair.substr(colon + 1), lineno)});
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            e.action = Action::bid(std::move(bids));
        } else {
            throw ParseError("unknown action kind '" + kind_tok + "'", lineno);
        }
        std::string sep;
        if (!(ls >> sep) || sep != ";") throw ParseError("missing ';' separator", lineno);
        std::string tick_tok;
        while (ls >> tick_tok) e.post_ticks.push_back(parse_int(tick_tok, lineno));
        if (static_cast<int>(e.post_ticks.size()) != t.menu.size())
            throw ParseError("post-price vector has wrong length", lineno);
        t.entries.push_back(std::move(e));
    }
    if (!saw_final) throw ParseError("missing #final line", lineno);
    if (!saw_outcome) throw ParseError("missing #outcome line", lineno);
    return t;
}

ReplayReport replay(const Transcript& t) {
    AuctionState s = new_auction(t.menu, t.grid, t.valuations.bidders(), false);
    // entry i sits on line i + 3 (header, config, then actions)
    int lineno = 2;
    for (const TranscriptEntry& e : t.entries) {
        ++lineno;
        const auto mover = next_mover(s);
        if (!mover)
            return {false, lineno, "auction already terminated before this action"};
        if (*mover != e.bidder)
            return {false, lineno,
                    "turn order: expected bidder " + std::to_string(*mover) + ", got " +
                        std::to_string(e.bidder)};
        const Observation obs =
            observe(s, t.menu, t.grid, t.valuations, e.bidder, t.wide_observation);
        if (observation_digest(obs) != e.digest)
            return {false, lineno, "observation digest mismatch"};
        const Validation val = validate_action(s, t.menu, t.grid, e.bidder, e.action);
        if (!val.ok())
            return {false, lineno,
                    std::string("action fails validation: ") + rule_name(val.rule) + " (" +
                        val.detail + ")"};
        s = apply_action(std::move(s), e.bidder, e.action);
        if (s.stage != e.stage)
            return {false, lineno, "stage counter mismatch"};
        if (s.price_ticks != e.post_ticks)
            return {false, lineno, "post-action price vector mismatch"};
    }
    const int tail = lineno + 1;
    if (!is_terminated(s)) return {false, tail, "log ends before termination"};
    if (s.price_ticks != t.final_state.price_ticks || s.leader != t.final_state.leader ||
        s.active != t.final_state.active || s.quiet_stages != t.final_state.quiet_stages ||
        s.stage != t.final_state.stage || s.last_mover != t.final_state.last_mover)
        return {false, tail, "final state mismatch"};
    const Outcome o = settle(s, t.menu, t.grid, t.valuations);
    if (!(o == t.outcome)) return {false, tail + 1, "outcome mismatch"};
    return {};
}

}  // namespace casa
