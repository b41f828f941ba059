#include <doctest.h>

#include <algorithm>

#include "casa/engine.hpp"
#include "casa/errors.hpp"
#include "casa/guarantees.hpp"
#include "casa/preference.hpp"
#include "casa/rng.hpp"
#include "casa/simulate.hpp"
#include "casa/strategy.hpp"
#include "casa/transcript.hpp"

using namespace casa;

namespace {

ValuationProfile single_item_values(std::vector<double> vals, double v_hi) {
    ValuationProfile v(static_cast<int>(vals.size()), 1, 0.0, v_hi);
    for (std::size_t n = 0; n < vals.size(); ++n)
        if (vals[n] > 0) v.set(static_cast<int>(n), Bundle({0}), vals[n]);
    return v;
}

}  // namespace

TEST_CASE("new_auction canonical initial state") {
    const Menu menu(2, {Bundle({0}), Bundle({1})});
    const PriceGrid grid(0.5, 4.0);
    const AuctionState s = new_auction(menu, grid, 3);
    CHECK(s.stage == 0);
    CHECK(s.price_ticks == std::vector<int>{0, 0});
    CHECK(s.leader == std::vector<int>{-1, -1});
    CHECK(s.active_count() == 3);
    CHECK(s.quiet_stages == 0);
    CHECK(!is_terminated(s));
}

TEST_CASE("bidder-count assumption is a hard error only when enforced") {
    const Menu menu(1, {Bundle({0})});
    const PriceGrid grid(1.0, 5.0);
    CHECK_NOTHROW(new_auction(menu, grid, 1, false));
    CHECK_THROWS_AS(new_auction(menu, grid, 1, true), ParamError);
}

TEST_CASE("validation rules") {
    const Menu menu(2, {Bundle({0}), Bundle({1})});
    const PriceGrid grid(1.0, 10.0);
    AuctionState s = new_auction(menu, grid, 3);

    // non-leader quit ok
    CHECK(validate_action(s, menu, grid, 0, Action::quit()).ok());
    // empty bid
    CHECK(validate_action(s, menu, grid, 0, Action::bid({})).rule == Rule::EmptyBid);
    // missing increment on a fresh bundle (price 0 means a bid must be >= 1)
    CHECK(validate_action(s, menu, grid, 0, Action::bid({{0, 0}})).rule ==
          Rule::MissingIncrement);
    // off grid
    CHECK(validate_action(s, menu, grid, 0, Action::bid({{0, 11}})).rule ==
          Rule::OffGridPrice);
    CHECK(validate_action(s, menu, grid, 0, Action::bid({{2, 1}})).rule ==
          Rule::BadBundleIndex);
    CHECK(validate_action(s, menu, grid, 0, Action::bid({{0, 1}, {0, 2}})).rule ==
          Rule::DuplicateBundle);

    s = apply_action(std::move(s), 0, Action::bid({{0, 3}}));
    // leader must re-bid its bundle
    CHECK(validate_action(s, menu, grid, 0, Action::bid({{1, 1}})).rule ==
          Rule::LedBundleMissing);
    // leader cannot lower
    CHECK(validate_action(s, menu, grid, 0, Action::bid({{0, 2}})).rule ==
          Rule::LedBundleLowered);
    // leader re-bid at the same price is legal ("weakly higher")
    CHECK(validate_action(s, menu, grid, 0, Action::bid({{0, 3}})).ok());
    // leader cannot quit
    CHECK(validate_action(s, menu, grid, 0, Action::quit()).rule == Rule::QuitWhileLeading);
    // a rival must strictly raise
    CHECK(validate_action(s, menu, grid, 1, Action::bid({{0, 3}})).rule ==
          Rule::MissingIncrement);
    CHECK(validate_action(s, menu, grid, 1, Action::bid({{0, 4}})).ok());
}

TEST_CASE("apply_action updates prices, leaders, quiet counter") {
    const Menu menu(2, {Bundle({0}), Bundle({1})});
    const PriceGrid grid(1.0, 10.0);
    AuctionState s = new_auction(menu, grid, 2);

    s = apply_action(std::move(s), 0, Action::bid({{0, 1}, {1, 2}}));
    CHECK(s.price_ticks == std::vector<int>{1, 2});
    CHECK(s.leader == std::vector<int>{0, 0});
    CHECK(s.quiet_stages == 0);
    CHECK(s.stage == 1);

    // rival takes bundle 0
    s = apply_action(std::move(s), 1, Action::bid({{0, 2}}));
    CHECK(s.leader == std::vector<int>{1, 0});
    CHECK(s.price_ticks == std::vector<int>{2, 2});

    // re-bids at unchanged prices are quiet stages
    s = apply_action(std::move(s), 0, Action::bid({{1, 2}}));
    CHECK(s.quiet_stages == 1);
    s = apply_action(std::move(s), 1, Action::bid({{0, 2}}));
    CHECK(s.quiet_stages == 2);
    CHECK(is_terminated(s));  // N = 2 quiet stages
}

TEST_CASE("quit is irreversible and keeps prices") {
    const Menu menu(1, {Bundle({0})});
    const PriceGrid grid(1.0, 5.0);
    AuctionState s = new_auction(menu, grid, 3);
    s = apply_action(std::move(s), 0, Action::bid({{0, 1}}));
    s = apply_action(std::move(s), 1, Action::quit());
    CHECK(s.active == std::vector<std::uint8_t>{1, 0, 1});
    CHECK(s.price_ticks == std::vector<int>{1});
    CHECK(s.quiet_stages == 1);
}

TEST_CASE("next_mover cycles ascending and wraps") {
    const Menu menu(1, {Bundle({0})});
    const PriceGrid grid(1.0, 5.0);
    AuctionState s = new_auction(menu, grid, 6);
    s.active = {0, 1, 0, 1, 0, 1};  // active {1,3,5}
    s.last_mover = 3;
    CHECK(next_mover(s) == 5);
    s.last_mover = 5;
    CHECK(next_mover(s) == 1);
    s.active = {0, 0, 0, 0, 0, 0};
    CHECK(!next_mover(s).has_value());
}

TEST_CASE("all bidders quitting terminates with zero revenue") {
    const Menu menu(1, {Bundle({0})});
    const PriceGrid grid(1.0, 5.0);
    ValuationProfile v = single_item_values({0, 0, 0}, 1.0);
    std::vector<StrategyPtr> strategies;
    for (int i = 0; i < 3; ++i) strategies.push_back(make_straightforward(0.0));
    const Transcript tr = run_auction(menu, grid, v, strategies, 1);
    CHECK(tr.outcome.revenue == 0.0);
    CHECK(tr.outcome.selection.empty());
    CHECK(tr.final_state.active_count() == 0);
}

TEST_CASE("two straightforward bidders: an English auction") {
    const Menu menu(1, {Bundle({0})});
    const PriceGrid grid(1.0, 12.0);
    ValuationProfile v = single_item_values({10, 7}, 10.0);
    std::vector<StrategyPtr> strategies;
    strategies.push_back(make_straightforward(0.0));
    strategies.push_back(make_straightforward(0.0));
    const Transcript tr = run_auction(menu, grid, v, strategies, 3);
    REQUIRE(tr.outcome.selection == std::vector<int>{0});
    CHECK(tr.outcome.winner[0] == 0);  // the value-10 bidder wins
    CHECK(tr.outcome.revenue >= 7.0 - 1.0);
    CHECK(tr.outcome.revenue <= 7.0 + 1.0);
}

TEST_CASE("settle: single bundle pay-as-bid") {
    const Menu menu(1, {Bundle({0})});
    const PriceGrid grid(1.0, 10.0);
    AuctionState s = new_auction(menu, grid, 3);
    s = apply_action(std::move(s), 2, Action::bid({{0, 7}}));
    s.quiet_stages = 3;
    ValuationProfile v = single_item_values({0, 0, 9}, 10.0);
    const Outcome o = settle(s, menu, grid, v);
    CHECK(o.selection == std::vector<int>{0});
    CHECK(o.winner[0] == 2);
    CHECK(o.revenue == 7.0);
    CHECK(o.utility[2] == 9.0 - 7.0);
}

TEST_CASE("settle: grand bundle sold when specialists stay idle") {
    const Menu menu(2, {Bundle({0}), Bundle({1}), Bundle({0, 1})});
    const PriceGrid grid(1.0, 4.0);
    AuctionState s = new_auction(menu, grid, 4);
    s = apply_action(std::move(s), 3, Action::bid({{2, 1}}));
    s.quiet_stages = 4;
    ValuationProfile v(4, 2, 0.0, 2.0);
    v.set(3, Bundle({0, 1}), 2.0);
    const Outcome o = settle(s, menu, grid, v);
    CHECK(o.selection == std::vector<int>{2});
    CHECK(o.revenue == 1.0);
    CHECK(o.utility[3] == 1.0);
}

TEST_CASE("settle: ties resolved toward the earlier index set") {
    const Menu menu(2, {Bundle({0}), Bundle({1}), Bundle({0, 1})});
    const PriceGrid grid(1.0, 10.0);
    AuctionState s = new_auction(menu, grid, 4);
    s = apply_action(std::move(s), 0, Action::bid({{0, 3}}));
    s = apply_action(std::move(s), 1, Action::bid({{1, 4}}));
    s = apply_action(std::move(s), 2, Action::bid({{2, 7}}));
    s.quiet_stages = 4;
    ValuationProfile v(4, 2, 0.0, 8.0);
    const Outcome o = settle(s, menu, grid, v);
    CHECK(o.revenue == 7.0);
    CHECK(o.selection == std::vector<int>{0, 1});  // 3+4 ties 7; earlier set wins
}

TEST_CASE("settle requires termination") {
    const Menu menu(1, {Bundle({0})});
    const PriceGrid grid(1.0, 5.0);
    const AuctionState s = new_auction(menu, grid, 2);
    ValuationProfile v = single_item_values({1, 1}, 2.0);
    CHECK_THROWS_AS(settle(s, menu, grid, v), ParamError);
}

TEST_CASE("run determinism: same seed, identical transcripts") {
    const Menu menu(3, {Bundle({0}), Bundle({1}), Bundle({2}), Bundle({0, 1, 2})});
    const PriceGrid grid(0.25, 2.0);
    ValuationProfile v(5, 3, 0.0, 1.5);
    Rng rng(9);
    for (int n = 0; n < 5; ++n)
        for (int b = 0; b < 4; ++b) {
            const double x = 0.25 * rng.below(7);
            if (x > 0) v.set(n, menu.bundle(b), x);
        }

    auto make = [&]() {
        std::vector<StrategyPtr> st;
        st.push_back(make_straightforward(0.0));
        st.push_back(make_jump_bidder(0.6));
        st.push_back(make_spoiler(1, 0.75));
        NonStrategicPolicy pol;
        pol.kind = NonStrategicPolicy::Kind::RandomWalk;
        st.push_back(make_non_strategic(pol));
        st.push_back(make_straightforward(0.0));
        return st;
    };
    auto s1 = make();
    auto s2 = make();
    const Transcript t1 = run_auction(menu, grid, v, s1, 77);
    const Transcript t2 = run_auction(menu, grid, v, s2, 77);
    CHECK(t1.serialize() == t2.serialize());

    // reusing the same instances relies on reset(); must still reproduce
    const Transcript t3 = run_auction(menu, grid, v, s1, 77);
    CHECK(t1.serialize() == t3.serialize());
}

TEST_CASE("run invariants: monotone prices, positive payments, quitters win nothing") {
    Rng rng(11);
    for (int t = 0; t < 40; ++t) {
        const Menu menu(2, {Bundle({0}), Bundle({1}), Bundle({0, 1})});
        const PriceGrid grid(0.1, 1.5);
        const int n_bidders = 4 + static_cast<int>(rng.below(4));
        ValuationProfile v(n_bidders, 2, 0.0, 1.0);
        for (int n = 0; n < n_bidders; ++n)
            for (int b = 0; b < 3; ++b) {
                const double x = 0.1 * rng.below(11);
                if (x > 0 && x <= 1.0) v.set(n, menu.bundle(b), x);
            }
        std::vector<StrategyPtr> st;
        for (int n = 0; n < n_bidders; ++n) {
            if (n % 3 == 0)
                st.push_back(make_jump_bidder(0.5));
            else
                st.push_back(make_straightforward(0.0));
        }
        const Transcript tr = run_auction(menu, grid, v, st, 1000 + t);

        std::vector<int> prev(menu.size(), 0);
        for (const auto& e : tr.entries) {
            for (int b = 0; b < menu.size(); ++b) CHECK(e.post_ticks[b] >= prev[b]);
            prev = e.post_ticks;
        }
        std::vector<char> quit(n_bidders, 0);
        for (const auto& e : tr.entries)
            if (e.action.is_quit()) quit[e.bidder] = 1;
        for (int w : tr.outcome.winner) CHECK(!quit[w]);
        for (std::size_t i = 0; i < tr.outcome.selection.size(); ++i)
            CHECK(tr.outcome.payment_ticks[i] > 0);
    }
}

TEST_CASE("transcript round-trip and replay") {
    const Menu menu(2, {Bundle({0}), Bundle({1}), Bundle({0, 1})});
    const PriceGrid grid(0.5, 2.0);
    ValuationProfile v(4, 2, 0.0, 1.5);
    v.set(0, Bundle({0}), 1.0);
    v.set(1, Bundle({1}), 1.5);
    v.set(2, Bundle({0, 1}), 1.0);
    std::vector<StrategyPtr> st;
    for (int i = 0; i < 4; ++i) st.push_back(make_straightforward(0.0));
    const Transcript tr = run_auction(menu, grid, v, st, 5);

    const std::string text = tr.serialize();
    const Transcript back = Transcript::parse(text);
    CHECK(back.serialize() == text);
    CHECK(replay(back).ok);

    Transcript truncated = back;
    truncated.entries.pop_back();
    CHECK(!replay(truncated).ok);
}

TEST_CASE("transcript parse errors carry line numbers") {
    CHECK_THROWS_AS(Transcript::parse("garbage\n"), ParseError);
    try {
        Transcript::parse("#casa-transcript v1\nnot-config\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("runaway guard") {
    const Menu menu(1, {Bundle({0})});
    const PriceGrid grid(0.01, 2.0);
    ValuationProfile v = single_item_values({1.0, 1.0}, 1.0);
    std::vector<StrategyPtr> st;
    st.push_back(make_straightforward(0.0));
    st.push_back(make_straightforward(0.0));
    RunConfig rc;
    rc.stage_cap = 10;  // far below the ~200 stages this run needs
    CHECK_THROWS_AS(run_auction(menu, grid, v, st, 1, rc), RunawayError);
}

TEST_CASE("quantity-cap menus run end to end and keep the revenue bound") {
    // the quantity menu for three homogeneous items: {0},{1},{2},{0,1},{0,1,2}
    PreferenceClass pc;
    pc.kind = PreferenceClass::Kind::Homogeneous;
    pc.n_items = 3;
    const MenuPlan plan = build_menu(pc);
    REQUIRE(plan.menu.mode() == Feasibility::QuantityCap);
    const PriceGrid grid(1.0 / 256.0, 1.5);  // lattice values sit on this grid

    for (int t = 0; t < 20; ++t) {
        const int n_bidders = plan.menu.size() + 1 + (t % 3);
        const ValuationProfile v = gen_valuation(pc, n_bidders, 777, t);
        std::vector<StrategyPtr> st;
        for (int n = 0; n < n_bidders; ++n) {
            if (n % 2 == 0)
                st.push_back(make_straightforward(0.0));
            else
                st.push_back(make_jump_bidder(0.5));
        }
        const Transcript tr = run_auction(plan.menu, grid, v, st, 9000 + t);
        CHECK(replay(tr).ok);
        CHECK(plan.menu.feasible(tr.outcome.selection));
        CHECK(check_revenue_bound(v, plan.menu, grid, tr.outcome, plan.rank).holds);
    }
}

TEST_CASE("observation stays narrow unless widened") {
    const Menu menu(1, {Bundle({0})});
    const PriceGrid grid(1.0, 5.0);
    ValuationProfile v = single_item_values({1, 1, 1}, 2.0);
    AuctionState s = new_auction(menu, grid, 3);
    s = apply_action(std::move(s), 1, Action::quit());
    CHECK(!observe(s, menu, grid, v, 0).active_bidders.has_value());
    CHECK(observe(s, menu, grid, v, 0, true).active_bidders == 2);
}

TEST_CASE("protocol fault carries a diagnostic transcript") {
    const Menu menu(1, {Bundle({0})});
    const PriceGrid grid(1.0, 5.0);
    ValuationProfile v = single_item_values({2.0, 2.0}, 2.0);
    std::vector<StrategyPtr> st;
    st.push_back(make_scripted({Action::bid({{0, 0}})}));  // no increment: illegal
    st.push_back(make_straightforward(0.0));
    try {
        run_auction(menu, grid, v, st, 1);
        CHECK(false);
    } catch (const ProtocolFault& e) {
        CHECK(std::string(e.what()).find("missing-increment") != std::string::npos);
        CHECK(e.transcript().find("#casa-transcript") != std::string::npos);
    }
}
