#include <doctest.h>

#include <algorithm>
#include <set>

#include "casa/bundle.hpp"
#include "casa/menu.hpp"
#include "casa/order_stats.hpp"
#include "casa/rng.hpp"
#include "casa/valuation.hpp"

using namespace casa;

namespace {

// Independent disjointness counter: counts feasible selections without the
// library's enumerator, by direct recursion over (index, used, quantity).
long long count_feasible_oracle(const Menu& menu, int i, std::uint32_t used, int qty) {
    if (i == menu.size()) return 1;
    long long total = count_feasible_oracle(menu, i + 1, used, qty);  // skip i
    const Bundle& b = menu.bundle(i);
    const bool ok = menu.mode() == Feasibility::Disjoint
                        ? (used & b.mask()) == 0
                        : qty + b.size() <= menu.items();
    if (ok)
        total += count_feasible_oracle(menu, i + 1, used | b.mask(), qty + b.size());
    return total;
}

}  // namespace

TEST_CASE("kth_highest basics") {
    CHECK(kth_highest({5.0, 3.0, 9.0}, 1) == 9.0);
    CHECK(kth_highest({5.0, 3.0, 9.0}, 2) == 5.0);
    CHECK(kth_highest({1.0, 1.0, 1.0}, 3) == 1.0);
    CHECK_THROWS_AS(kth_highest({1.0, 2.0}, 0), ParamError);
    CHECK_THROWS_AS(kth_highest({1.0, 2.0}, 3), ParamError);
}

TEST_CASE("kth_highest is weakly decreasing in k") {
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        std::vector<double> vals(1 + rng.below(10));
        for (double& v : vals) v = rng.uniform(0, 5);
        for (std::size_t k = 2; k <= vals.size(); ++k)
            CHECK(kth_highest(vals, static_cast<int>(k)) <=
                  kth_highest(vals, static_cast<int>(k) - 1));
    }
}

TEST_CASE("bundle canonical form ignores construction order") {
    CHECK(Bundle({2, 0, 1}) == Bundle({0, 1, 2}));
    CHECK(Bundle::of({3, 1}) == Bundle({1, 3}));
    CHECK(Bundle({0, 1}).disjoint(Bundle({2})));
    CHECK(!Bundle({0, 1}).disjoint(Bundle({1, 2})));
    CHECK(Bundle({0, 2}).size() == 2);
    CHECK(Bundle().empty());
    CHECK(Bundle::all(3) == Bundle({0, 1, 2}));
}

TEST_CASE("valuation profile defaults and bounds") {
    ValuationProfile v(2, 2, 0.25, 2.0);
    v.set(0, Bundle({0}), 1.5);
    CHECK(v.value(0, Bundle({0})) == 1.5);
    CHECK(v.value(0, Bundle({1})) == 0.25);  // unset -> v_lo
    CHECK(v.value(1, Bundle()) == 0.0);      // empty bundle is always 0
    CHECK_THROWS_AS(v.set(0, Bundle({1}), 2.5), ParamError);
    CHECK_THROWS_AS(v.set(0, Bundle(), 0.0), ParamError);
}

TEST_CASE("menu feasibility") {
    const Menu disjoint(2, {Bundle({0}), Bundle({1}), Bundle({0, 1})});
    CHECK(disjoint.feasible({0, 1}));
    CHECK(!disjoint.feasible({0, 2}));
    CHECK(disjoint.feasible({}));
    CHECK_THROWS_AS(disjoint.feasible({0, 0}), ParamError);
    CHECK_THROWS_AS(disjoint.feasible({3}), ParamError);

    const Menu quantity(3, {Bundle({0}), Bundle({1}), Bundle({2}), Bundle({0, 1})},
                        Feasibility::QuantityCap);
    CHECK(quantity.feasible({0, 1, 2}));   // three singletons fill the cap
    CHECK(!quantity.feasible({0, 1, 2, 3}));
    CHECK(quantity.feasible({0, 3}));      // overlap is fine under the cap
}

TEST_CASE("menu rejects duplicates and empties") {
    CHECK_THROWS_AS(Menu(2, {Bundle({0}), Bundle({0})}), ParamError);
    CHECK_THROWS_AS(Menu(2, {Bundle()}), ParamError);
    CHECK_THROWS_AS(Menu(1, {Bundle({1})}), ParamError);
}

TEST_CASE("enumerate_feasible: hand example") {
    const Menu menu(2, {Bundle({0}), Bundle({1}), Bundle({0, 1})});
    const auto sels = enumerate_feasible(menu);
    const std::vector<std::vector<int>> expected = {{}, {0}, {0, 1}, {1}, {2}};
    CHECK(sels == expected);

    const Menu single(1, {Bundle({0})});
    CHECK(enumerate_feasible(single).size() == 2);
}

TEST_CASE("enumerate_feasible matches the recursive counter") {
    Rng rng(99);
    for (int t = 0; t < 120; ++t) {
        const int items = 2 + static_cast<int>(rng.below(5));
        const std::uint32_t all = (1u << items) - 1u;
        const int want = 1 + static_cast<int>(rng.below(std::min(10u, all)));
        std::vector<std::uint32_t> masks;
        for (std::uint32_t m = 1; m <= all; ++m) masks.push_back(m);
        for (int i = 0; i < want; ++i) {
            const int j = i + static_cast<int>(rng.below(masks.size() - i));
            std::swap(masks[i], masks[j]);
        }
        std::vector<Bundle> bundles;
        for (int i = 0; i < want; ++i) bundles.push_back(Bundle(masks[i]));
        const Feasibility mode =
            rng.bernoulli(0.4) ? Feasibility::QuantityCap : Feasibility::Disjoint;
        const Menu menu(items, bundles, mode);
        const auto sels = enumerate_feasible(menu);
        CHECK(static_cast<long long>(sels.size()) == count_feasible_oracle(menu, 0, 0, 0));
        // no duplicates, each selection feasible
        for (const auto& s : sels) CHECK(menu.feasible(s));
        auto sorted = sels;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    }
}

TEST_CASE("enumerate_feasible is closed under subsets (disjoint mode)") {
    Rng rng(5);
    const Menu menu(4, {Bundle({0}), Bundle({1}), Bundle({2}), Bundle({0, 3}), Bundle({1, 2})});
    const auto sels = enumerate_feasible(menu);
    std::set<std::vector<int>> seen(sels.begin(), sels.end());
    for (const auto& s : sels) {
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) sub.push_back(s[i]);
            CHECK(seen.count(sub) == 1);
        }
    }
}

TEST_CASE("enumeration cap") {
    std::vector<Bundle> many;
    for (int i = 0; i < 21; ++i) many.push_back(Bundle({i}));
    const Menu menu(21, many);
    CHECK_THROWS_AS(enumerate_feasible(menu), SizeError);
    CHECK_NOTHROW(enumerate_feasible(menu, 21));
}
