#include "casa/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "casa/coalition.hpp"
#include "casa/dominance.hpp"
#include "casa/errors.hpp"
#include "casa/guarantees.hpp"
#include "casa/mechanisms.hpp"
#include "casa/oracles.hpp"
#include "casa/preference.hpp"
#include "casa/rng.hpp"
#include "casa/scenario.hpp"
#include "casa/serialize.hpp"
#include "casa/simulate.hpp"

namespace casa {

using nlohmann::json;

std::string library_version() { return "0.1.0"; }

namespace {

// ---- shared scenario machinery ------------------------------------------

struct RandomScenario {
    Menu menu;
    PriceGrid grid;
    ValuationProfile values;
};

Menu random_menu(Rng& rng, int max_items, int max_bundles, bool allow_quantity_cap) {
    const int m_items = 1 + static_cast<int>(rng.below(max_items));
    const std::uint32_t all = (1u << m_items) - 1u;
    const int max_distinct = static_cast<int>(all);
    const int want = 1 + static_cast<int>(rng.below(std::min(max_bundles, max_distinct)));
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 1; m <= all; ++m) masks.push_back(m);
    for (int i = 0; i < want; ++i) {
        const int j = i + static_cast<int>(rng.below(masks.size() - i));
        std::swap(masks[i], masks[j]);
    }
    std::vector<Bundle> bundles;
    for (int i = 0; i < want; ++i) bundles.push_back(Bundle(masks[i]));
    const Feasibility mode = allow_quantity_cap && rng.bernoulli(0.3)
                                 ? Feasibility::QuantityCap
                                 : Feasibility::Disjoint;
    return Menu(m_items, std::move(bundles), mode);
}

// Values snapped to the grid so the revenue bound is judged exactly.
RandomScenario random_grid_scenario(Rng& rng, int scenario_index, int min_extra_bidders) {
    const double eps = (scenario_index % 2 == 0) ? 0.1 : 0.01;
    Menu menu = random_menu(rng, 3, 5, false);
    PriceGrid grid(eps, 1.0 + 10.0 * eps);
    const int lo = menu.size() + 1 + min_extra_bidders;
    const int hi = std::max(lo, 12);
    const int n_bidders = lo + static_cast<int>(rng.below(hi - lo + 1));
    const int value_ticks = grid.floor_ticks(1.0);
    ValuationProfile v(n_bidders, menu.items(), 0.0, 1.0);
    for (int n = 0; n < n_bidders; ++n)
        for (int b = 0; b < menu.size(); ++b) {
            const int t = static_cast<int>(rng.below(value_ticks + 1));
            if (t > 0) v.set(n, menu.bundle(b), grid.price(t));
        }
    return {std::move(menu), grid, std::move(v)};
}

StrategyPtr random_rational_strategy(Rng& rng, const Menu& menu) {
    switch (rng.below(3)) {
        case 0: return make_straightforward(0.0);
        case 1: return make_jump_bidder(0.25 + 0.75 * rng.u01());
        default:
            return make_spoiler(static_cast<int>(rng.below(menu.size())),
                                rng.u01());
    }
}

double mean_of(const std::vector<double>& xs) {
    double s = 0;
    for (double x : xs) s += x;
    return s / xs.size();
}

// least-squares slope of y on x
double slope_of(const std::vector<double>& x, const std::vector<double>& y) {
    const double mx = mean_of(x), my = mean_of(y);
    double num = 0, den = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += (x[i] - mx) * (y[i] - my);
        den += (x[i] - mx) * (x[i] - mx);
    }
    return num / den;
}

// ---- suites ---------------------------------------------------------------

// Criterion: over seeded scenarios mixing straightforward/jump/spoiler
// profiles, CASA revenue >= R^{|menu|+1} - |menu| * eps with zero violations.
SuiteOutcome suite_revenue_bound(const SuiteOptions& opts) {
    const long long trials = opts.trials > 0 ? opts.trials : 1000;
    long long violations = 0, total_stages = 0;
    double sum_revenue = 0.0, sum_guarantee = 0.0;
    json rows = json::array();
    for (long long i = 0; i < trials; ++i) {
        Rng rng(derive_seed(opts.seed, 0xB0 + 17 * i));
        RandomScenario sc = random_grid_scenario(rng, static_cast<int>(i), 0);
        std::vector<StrategyPtr> strategies;
        for (int n = 0; n < sc.values.bidders(); ++n)
            strategies.push_back(random_rational_strategy(rng, sc.menu));
        const std::uint64_t run_seed = derive_seed(opts.seed, i);
        const Transcript tr = run_auction(sc.menu, sc.grid, sc.values, strategies, run_seed);
        const RevenueBound rb =
            check_revenue_bound(sc.values, sc.menu, sc.grid, tr.outcome, sc.menu.size() + 1);
        sum_revenue += tr.outcome.revenue;
        sum_guarantee += rb.guarantee;
        total_stages += static_cast<long long>(tr.entries.size());
        if (!rb.holds) {
            ++violations;
            rows.push_back({{"scenario", i},
                            {"seed", run_seed},
                            {"revenue", tr.outcome.revenue},
                            {"guarantee", rb.guarantee},
                            {"transcript", tr.serialize()}});
        } else if (i < 32) {
            rows.push_back({{"scenario", i},
                            {"seed", run_seed},
                            {"revenue", tr.outcome.revenue},
                            {"guarantee", rb.guarantee},
                            {"holds", true}});
        }
    }
    SuiteOutcome out;
    out.suite = "revenue-bound";
    out.pass = violations == 0;
    out.summary = std::to_string(trials) + " scenarios, " + std::to_string(violations) +
                  " violations of revenue >= R^{m+1} - m*eps";
    out.report = {{"trials", trials},
                  {"violations", violations},
                  {"aggregate",
                   {{"mean_revenue", sum_revenue / static_cast<double>(trials)},
                    {"mean_guarantee", sum_guarantee / static_cast<double>(trials)},
                    {"mean_stages", static_cast<double>(total_stages) /
                                        static_cast<double>(trials)}}},
                  {"rows", rows}};
    return out;
}

// Criterion: the bound survives j in {1,2} non-strategic bidders with
// k = |menu|+1+j, and coalition partitions with k = sum of the |menu|
// largest group sizes + 1. Zero violations.
SuiteOutcome suite_robustness(const SuiteOptions& opts) {
    const long long trials = opts.trials > 0 ? opts.trials : 500;
    long long violations = 0, vacuous = 0;

    // non-strategic bidders
    for (long long i = 0; i < trials; ++i) {
        Rng rng(derive_seed(opts.seed, 0xA100 + 13 * i));
        const int j = 1 + static_cast<int>(rng.below(2));
        RandomScenario sc = random_grid_scenario(rng, static_cast<int>(i), j);
        std::vector<StrategyPtr> strategies;
        for (int n = 0; n < sc.values.bidders(); ++n)
            strategies.push_back(random_rational_strategy(rng, sc.menu));
        for (int s = 0; s < j; ++s) {
            NonStrategicPolicy pol;
            switch (rng.below(3)) {
                case 0: pol.kind = NonStrategicPolicy::Kind::QuitImmediately; break;
                case 1:
                    pol.kind = NonStrategicPolicy::Kind::QuitAfter;
                    pol.quit_after = 1 + static_cast<int>(rng.below(3));
                    break;
                default: pol.kind = NonStrategicPolicy::Kind::RandomWalk; break;
            }
            strategies[rng.below(strategies.size())] = make_non_strategic(pol);
        }
        const Transcript tr =
            run_auction(sc.menu, sc.grid, sc.values, strategies, derive_seed(opts.seed, 7 * i));
        const RevenueBound rb = check_revenue_bound(sc.values, sc.menu, sc.grid, tr.outcome,
                                                    sc.menu.size() + 1 + j);
        if (!rb.holds) ++violations;
    }

    // coalitions
    for (long long i = 0; i < trials; ++i) {
        Rng rng(derive_seed(opts.seed, 0xA200 + 13 * i));
        RandomScenario sc = random_grid_scenario(rng, static_cast<int>(i), 0);
        CoalitionSpec spec;
        std::vector<int> pool(sc.values.bidders());
        for (int n = 0; n < sc.values.bidders(); ++n) pool[n] = n;
        std::size_t at = 0;
        while (at < pool.size()) {
            const int size =
                1 + static_cast<int>(rng.below(std::min<std::size_t>(3, pool.size() - at)));
            spec.groups.emplace_back(pool.begin() + at, pool.begin() + at + size);
            at += size;
        }
        std::vector<StrategyPtr> strategies =
            make_coalition_profile(spec, sc.values, sc.menu);
        const Transcript tr =
            run_auction(sc.menu, sc.grid, sc.values, strategies, derive_seed(opts.seed, 9 * i));
        const int k_eff = coalition_rank(spec, sc.menu.size());
        const RevenueBound rb =
            check_revenue_bound(sc.values, sc.menu, sc.grid, tr.outcome, k_eff);
        if (rb.vacuous) ++vacuous;
        if (!rb.holds) ++violations;
    }

    SuiteOutcome out;
    out.suite = "robustness";
    out.pass = violations == 0;
    out.summary = std::to_string(2 * trials) + " scenarios (" + std::to_string(vacuous) +
                  " vacuous coalition bounds), " + std::to_string(violations) + " violations";
    out.report = {{"trials", 2 * trials}, {"violations", violations}, {"vacuous", vacuous}};
    return out;
}

// Criterion: the two-tier family's mean k-th guarantee equals
// 1/2 - (k-1)/(2N) within 3 SE for (k,N) in {2..5} x {10,20,50}.
SuiteOutcome suite_worst_case(const SuiteOptions& opts) {
    const long long trials = opts.trials > 0 ? opts.trials : 20000;
    const Menu menu(2, {Bundle({0}), Bundle({1}), Bundle({0, 1})});
    bool pass = true;
    json rows = json::array();
    for (int k = 2; k <= 5; ++k) {
        for (int n : {10, 20, 50}) {
            const DistributionSpec spec = make_two_tier_spec(k, n, 2);
            // per-cell stream: cells must not share draws
            const std::uint64_t cell_seed =
                derive_seed(opts.seed, 0xCE11ull + 1000ull * k + static_cast<std::uint64_t>(n));
            const MeanReport rep = rank_guarantee_mean(spec, menu, k, trials, cell_seed);
            const double target = 0.5 - static_cast<double>(k - 1) / (2.0 * n);
            const bool ok = std::abs(rep.mean - target) <= 3.0 * rep.se;
            pass = pass && ok;
            rows.push_back({{"k", k},
                            {"N", n},
                            {"mean", rep.mean},
                            {"se", rep.se},
                            {"target", target},
                            {"holds", ok}});
        }
    }
    SuiteOutcome out;
    out.suite = "worst-case";
    out.pass = pass;
    out.summary = std::string("two-tier mean vs 1/2-(k-1)/(2N) on 12 (k,N) pairs: ") +
                  (pass ? "all within 3 SE" : "deviation found");
    out.report = {{"trials", trials}, {"rows", rows}};
    return out;
}

// Criterion: per-distribution inequality E[R^k] >= E[random-bidder best
// allocation] - (k-1)|menu| v_hi/N at 3 SE on the test grid, plus the gap to
// the efficient surplus shrinking like 1/N (log-log slope <= -0.8).
SuiteOutcome suite_distribution_bound(const SuiteOptions& opts) {
    const long long trials = opts.trials > 0 ? opts.trials : 10000;
    const Menu menu = Menu::complete(2);
    const int k = menu.size() + 1;
    bool pass = true;
    json rows = json::array();

    auto record = [&](const std::string& label, const BoundReport& rep, bool extra_ok = true) {
        pass = pass && rep.holds && extra_ok;
        rows.push_back({{"spec", label},
                        {"lhs_mean", rep.lhs_mean},
                        {"rhs_mean", rep.rhs_mean},
                        {"slack", rep.slack},
                        {"diff_mean", rep.diff_mean},
                        {"diff_se", rep.diff_se},
                        {"holds", rep.holds && extra_ok}});
    };

    DistributionSpec iid;
    iid.kind = DistributionSpec::Kind::IidPerBundle;
    iid.n_bidders = 10;
    record("iid-per-bundle", random_bidder_bound_report(iid, menu, k, trials, opts.seed));

    DistributionSpec corr;
    corr.kind = DistributionSpec::Kind::MaxCorrelated;
    corr.n_bidders = 10;
    {
        const BoundReport rep = random_bidder_bound_report(corr, menu, k, trials, opts.seed);
        // identical bidders: every order statistic coincides, so the two
        // sides agree trial by trial and in the mean, exactly
        record("max-correlated", rep, rep.lhs_mean == rep.rhs_mean);
    }

    record("two-tier(k=4)",
           random_bidder_bound_report(make_two_tier_spec(4, 10, 2), menu, k, trials, opts.seed));
    record("two-tier(k=2)",
           random_bidder_bound_report(make_two_tier_spec(2, 10, 2), menu, k, trials, opts.seed));

    // gap decay in N
    std::vector<double> log_n, log_gap;
    json sweep = json::array();
    for (int n : {10, 20, 40, 80}) {
        DistributionSpec spec;
        spec.kind = DistributionSpec::Kind::IidPerBundle;
        spec.n_bidders = n;
        const GapReport g = surplus_gap_report(spec, menu, k, 2 * trials, opts.seed);
        pass = pass && g.holds && g.gap_mean > 0.0;
        log_n.push_back(std::log(static_cast<double>(n)));
        log_gap.push_back(std::log(std::max(g.gap_mean, 1e-12)));
        sweep.push_back({{"N", n}, {"gap_mean", g.gap_mean}, {"gap_se", g.gap_se},
                         {"holds", g.holds}});
    }
    const double slope = slope_of(log_n, log_gap);
    pass = pass && slope <= -0.8;

    SuiteOutcome out;
    out.suite = "distribution-bound";
    out.pass = pass;
    std::ostringstream s;
    s << "4 specs at 3 SE; surplus gap slope " << slope << " (need <= -0.8)";
    out.summary = s.str();
    out.report = {{"trials", trials}, {"rows", rows}, {"sweep", sweep}, {"slope", slope}};
    return out;
}

// Criterion: the three-bundle fixture gives VCG revenue exactly 0 with
// R^k = 1 for all 2 <= k <= N, and on weak-substitutes instances VCG
// revenue >= R^{M+1} over the item menu with zero violations.
SuiteOutcome suite_vcg(const SuiteOptions& opts) {
    const long long trials = opts.trials > 0 ? opts.trials : 1000;
    bool fixture_ok = true;

    // two specialists and a common grand-bundle value
    const Menu menu(2, {Bundle({0}), Bundle({1}), Bundle({0, 1})});
    ValuationProfile v(4, 2, 0.0, 1.0);
    for (int n = 0; n < 4; ++n) v.set(n, Bundle({0, 1}), 1.0);
    v.set(0, Bundle({0}), 1.0);
    v.set(1, Bundle({1}), 1.0);
    const MechanismOutcome mo = vcg(v, menu);
    fixture_ok = fixture_ok && mo.revenue == 0.0;
    for (int k = 2; k <= 4; ++k)
        fixture_ok = fixture_ok && rank_guarantee(v, menu, k) == 1.0;

    long long violations = 0;
    for (long long i = 0; i < trials; ++i) {
        Rng rng(derive_seed(opts.seed, 0xC0DE + 31 * i));
        PreferenceClass pc;
        pc.kind = PreferenceClass::Kind::WeakSubstitutes;
        pc.n_items = 2 + static_cast<int>(rng.below(4));
        const int n_bidders = pc.n_items + 1 +
                              static_cast<int>(rng.below(12 - pc.n_items));
        const ValuationProfile vi = gen_valuation(pc, n_bidders, opts.seed, i);
        const MenuPlan plan = build_menu(pc);  // individual items, rank M+1
        const MechanismOutcome m = vcg(vi, plan.menu);
        const double floor = rank_guarantee(vi, plan.menu, plan.rank);
        if (!(m.revenue >= floor)) ++violations;
    }

    SuiteOutcome out;
    out.suite = "vcg";
    out.pass = fixture_ok && violations == 0;
    out.summary = std::string("fixture identities ") + (fixture_ok ? "exact" : "WRONG") + "; " +
                  std::to_string(trials) + " substitutes instances, " +
                  std::to_string(violations) + " violations of R_VCG >= R^{M+1}";
    out.report = {{"fixture_ok", fixture_ok},
                  {"fixture_vcg_revenue", mo.revenue},
                  {"trials", trials},
                  {"violations", violations}};
    return out;
}

// Criterion: generated vectors of each preference class satisfy the
// restricted-vs-complete menu identity exactly, and the built (menu, rank)
// pairs match the advertised table.
SuiteOutcome suite_sufficiency(const SuiteOptions& opts) {
    const long long trials = opts.trials > 0 ? opts.trials : 1000;
    long long failures = 0;
    json classes = json::array();

    auto run_class = [&](const std::string& label, auto make_pc, int expected_rank_kind) {
        long long class_failures = 0;
        for (long long t = 0; t < trials; ++t) {
            Rng rng(derive_seed(opts.seed, 0x5F00 + 101 * t));
            PreferenceClass pc = make_pc(rng, t);
            const MenuPlan plan = build_menu(pc);
            const ValuationProfile v = gen_valuation(pc, 1, opts.seed, t);
            if (!satisfies_class(pc, v, 0)) ++class_failures;
            if (!check_expost_sufficiency(v, 0, plan.menu)) ++class_failures;
            switch (expected_rank_kind) {
                case 0:
                    if (plan.rank != pc.n_items + 1) ++class_failures;
                    break;
                case 1:
                    if (plan.rank != 2) ++class_failures;
                    break;
                case 2:
                    if (plan.rank != static_cast<int>(pc.partition.size()) + 1)
                        ++class_failures;
                    break;
                case 3: {
                    const int quad = (pc.n_items * pc.n_items + pc.n_items) / 2;
                    if (plan.rank != plan.menu.size() + 1 || plan.rank > quad)
                        ++class_failures;
                    break;
                }
            }
        }
        failures += class_failures;
        classes.push_back({{"class", label}, {"failures", class_failures}});
    };

    run_class("weak-substitutes",
              [](Rng& rng, long long) {
                  PreferenceClass pc;
                  pc.kind = PreferenceClass::Kind::WeakSubstitutes;
                  pc.n_items = 2 + static_cast<int>(rng.below(4));
                  return pc;
              },
              0);
    run_class("weak-complements",
              [](Rng& rng, long long) {
                  PreferenceClass pc;
                  pc.kind = PreferenceClass::Kind::WeakComplements;
                  pc.n_items = 2 + static_cast<int>(rng.below(4));
                  return pc;
              },
              1);
    run_class("partitioned-complements",
              [](Rng& rng, long long) {
                  PreferenceClass pc;
                  pc.kind = PreferenceClass::Kind::PartitionedComplements;
                  pc.n_items = 2 + static_cast<int>(rng.below(4));
                  std::vector<int> items(pc.n_items);
                  for (int i = 0; i < pc.n_items; ++i) items[i] = i;
                  for (int i = 0; i < pc.n_items; ++i) {
                      const int j = i + static_cast<int>(rng.below(pc.n_items - i));
                      std::swap(items[i], items[j]);
                  }
                  std::size_t at = 0;
                  while (at < items.size()) {
                      const std::size_t size =
                          1 + rng.below(std::min<std::size_t>(3, items.size() - at));
                      Bundle blk;
                      for (std::size_t i = at; i < at + size; ++i)
                          blk = blk.unite(Bundle({items[i]}));
                      pc.partition.push_back(blk);
                      at += size;
                  }
                  return pc;
              },
              2);
    // the quadratic rank bound only clears the quantity-menu size for M >= 3
    run_class("homogeneous",
              [](Rng& rng, long long) {
                  PreferenceClass pc;
                  pc.kind = PreferenceClass::Kind::Homogeneous;
                  pc.n_items = 3 + static_cast<int>(rng.below(3));
                  return pc;
              },
              3);

    SuiteOutcome out;
    out.suite = "sufficiency";
    out.pass = failures == 0;
    out.summary = std::to_string(4 * trials) + " generated vectors across 4 classes, " +
                  std::to_string(failures) + " failures";
    out.report = {{"trials_per_class", trials}, {"classes", classes}};
    return out;
}

// Criterion: solve_wdp and efficient_surplus match brute-force enumeration
// exactly on random instances.
SuiteOutcome suite_solver_oracle(const SuiteOptions& opts) {
    const long long trials = opts.trials > 0 ? opts.trials : 10000;
    long long wdp_mismatch = 0, surplus_mismatch = 0;

    for (long long i = 0; i < trials; ++i) {
        Rng rng(derive_seed(opts.seed, 0x50AC + 7 * i));
        const Menu menu = random_menu(rng, 10, 12, true);
        std::vector<double> w(menu.size());
        for (double& x : w) x = static_cast<double>(rng.below(4096)) / 256.0;  // dyadic
        const WdpResult got = solve_wdp(menu, w);
        const WdpResult want = reference::wdp_by_enumeration(menu, w, menu.size());
        if (got.objective != want.objective || got.selection != want.selection)
            ++wdp_mismatch;
    }

    for (long long i = 0; i < trials; ++i) {
        Rng rng(derive_seed(opts.seed, 0x50AD + 7 * i));
        const Menu menu = random_menu(rng, 6, 12, true);
        const int n_bidders = 2 + static_cast<int>(rng.below(3));
        ValuationProfile v(n_bidders, menu.items(), 0.0, 16.0);
        for (int n = 0; n < n_bidders; ++n)
            for (int b = 0; b < menu.size(); ++b) {
                const double x = static_cast<double>(rng.below(4096)) / 256.0;
                if (x > 0) v.set(n, menu.bundle(b), x);
            }
        const Allocation got = efficient_surplus(v, menu);
        const Allocation want = reference::efficient_surplus_by_enumeration(v, menu, menu.size());
        if (got.value != want.value || got.selection != want.selection) ++surplus_mismatch;
    }

    SuiteOutcome out;
    out.suite = "solver-oracle";
    out.pass = wdp_mismatch == 0 && surplus_mismatch == 0;
    out.summary = std::to_string(trials) + "+" + std::to_string(trials) +
                  " instances; wdp mismatches " + std::to_string(wdp_mismatch) +
                  ", surplus mismatches " + std::to_string(surplus_mismatch);
    out.report = {{"trials", trials},
                  {"wdp_mismatches", wdp_mismatch},
                  {"surplus_mismatches", surplus_mismatch}};
    return out;
}

// Criterion: transcripts replay to identical outcomes; a tampered transcript
// is caught at its line; rerunning a suite reproduces its report exactly.
SuiteOutcome suite_determinism(const SuiteOptions& opts) {
    bool pass = true;
    json checks = json::array();
    auto check = [&](const std::string& label, bool ok) {
        pass = pass && ok;
        checks.push_back({{"check", label}, {"ok", ok}});
    };

    Rng rng(derive_seed(opts.seed, 0xDE7));
    RandomScenario sc = random_grid_scenario(rng, 0, 0);
    std::vector<StrategyPtr> strategies;
    for (int n = 0; n < sc.values.bidders(); ++n)
        strategies.push_back(random_rational_strategy(rng, sc.menu));

    const Transcript t1 = run_auction(sc.menu, sc.grid, sc.values, strategies, 42);
    const Transcript t2 = run_auction(sc.menu, sc.grid, sc.values, strategies, 42);
    check("same seed, byte-identical transcripts", t1.serialize() == t2.serialize());

    const Transcript parsed = Transcript::parse(t1.serialize());
    check("parse round-trip re-serializes identically", parsed.serialize() == t1.serialize());
    check("replay of untouched transcript", replay(parsed).ok);

    {
        Transcript tampered = parsed;
        bool flipped = false;
        for (auto& e : tampered.entries) {
            if (!e.post_ticks.empty() && e.post_ticks[0] > 0 && !flipped) {
                e.post_ticks[0] += 1;
                flipped = true;
            }
        }
        const ReplayReport r = replay(tampered);
        check("edited price detected at its line", flipped && !r.ok && r.line > 0);
    }
    {
        Transcript tampered = parsed;
        bool injected = false;
        for (auto& e : tampered.entries) {
            if (!e.action.is_quit() && !injected) {
                e.action.bids[0].ticks = -1;  // below any leading price and off grid
                injected = true;
            }
        }
        const ReplayReport r = replay(tampered);
        check("injected illegal bid fails validation",
              injected && !r.ok && r.detail.find("validation") != std::string::npos);
    }
    {
        SuiteOptions small;
        small.seed = opts.seed;
        small.trials = 500;
        const SuiteOutcome a = suite_worst_case(small);
        const SuiteOutcome b = suite_worst_case(small);
        check("suite report byte-identical on rerun", a.report.dump() == b.report.dump());
    }

    SuiteOutcome out;
    out.suite = "determinism";
    out.pass = pass;
    out.summary = pass ? "replay, tamper detection, and report reproduction all hold"
                       : "determinism failure";
    out.report = {{"checks", checks}};
    return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "revenue-bound", "robustness",  "worst-case",    "distribution-bound",
        "vcg",           "sufficiency", "solver-oracle", "determinism"};
    return names;
}

SuiteOutcome run_suite(const std::string& name, const SuiteOptions& opts) {
    SuiteOutcome out;
    if (name == "revenue-bound")
        out = suite_revenue_bound(opts);
    else if (name == "robustness")
        out = suite_robustness(opts);
    else if (name == "worst-case")
        out = suite_worst_case(opts);
    else if (name == "distribution-bound")
        out = suite_distribution_bound(opts);
    else if (name == "vcg")
        out = suite_vcg(opts);
    else if (name == "sufficiency")
        out = suite_sufficiency(opts);
    else if (name == "solver-oracle")
        out = suite_solver_oracle(opts);
    else if (name == "determinism")
        out = suite_determinism(opts);
    else
        throw ParamError("unknown suite '" + name + "'");
    out.report["suite"] = out.suite;
    out.report["pass"] = out.pass;
    out.report["seed"] = opts.seed;
    out.report["version"] = library_version();
    return out;
}

}  // namespace casa
