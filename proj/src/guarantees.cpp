#include "casa/guarantees.hpp"

#include <cmath>

#include "casa/errors.hpp"
#include "casa/order_stats.hpp"
#include "casa/rng.hpp"
#include "casa/surplus.hpp"
#include "casa/transcript.hpp"
#include "casa/wdp.hpp"

namespace casa {
namespace {

struct Accumulator {
    double sum = 0.0, sumsq = 0.0;
    long long n = 0;
    void add(double x) {
        sum += x;
        sumsq += x * x;
        ++n;
    }
    double mean() const { return sum / static_cast<double>(n); }
    double se() const {
        if (n < 2) return 0.0;
        const double m = mean();
        const double var = (sumsq - static_cast<double>(n) * m * m) / static_cast<double>(n - 1);
        return std::sqrt(std::max(var, 0.0) / static_cast<double>(n));
    }
};

}  // namespace

double rank_guarantee(const ValuationProfile& v, const Menu& menu, int k, int menu_cap) {
    if (k < 1 || k > v.bidders()) throw ParamError("rank_guarantee: k out of range");
    std::vector<double> weights(menu.size());
    for (int b = 0; b < menu.size(); ++b)
        weights[b] = kth_highest(v.bundle_values(menu.bundle(b)), k);
    return solve_wdp(menu, weights, menu_cap).objective;
}

RevenueBound check_revenue_bound(const ValuationProfile& v, const Menu& menu,
                                 const PriceGrid& grid, const Outcome& outcome,
                                 int k_effective) {
    RevenueBound rb;
    rb.k_effective = k_effective;
    rb.revenue_ticks = outcome.revenue_ticks;
    rb.slack = menu.size() * grid.epsilon();
    if (k_effective < 1) throw ParamError("check_revenue_bound: k must be positive");
    if (k_effective > v.bidders()) {
        rb.vacuous = true;
        rb.holds = outcome.revenue_ticks >= 0;
        return rb;
    }
    rb.guarantee = rank_guarantee(v, menu, k_effective);
    // revenue_ticks * eps >= guarantee - |menu| * eps, compared in ticks.
    // The tiny guard forgives division round-off; a real violation is at
    // least one whole tick.
    const double bound_ticks = rb.guarantee / grid.epsilon() - menu.size();
    rb.holds = static_cast<double>(rb.revenue_ticks) >= bound_ticks - 1e-6;
    return rb;
}

RevenueBound check_revenue_bound(const Transcript& t, int k_effective) {
    return check_revenue_bound(t.valuations, t.menu, t.grid, t.outcome, k_effective);
}

ValuationProfile DistributionSpec::sample(const Menu& menu, std::uint64_t seed,
                                          long long trial) const {
    if (n_bidders < 1) throw ParamError("DistributionSpec: bidder count must be positive");
    if (!bundle_ranges.empty() &&
        static_cast<int>(bundle_ranges.size()) != menu.size())
        throw ParamError("DistributionSpec: one range per menu bundle required");
    if (kind == Kind::TwoTierShock && (target_bundle < 0 || target_bundle >= menu.size()))
        throw ParamError("DistributionSpec: target bundle outside the menu");
    Rng rng(derive_seed(seed, 0x7472'0000ull + static_cast<std::uint64_t>(trial)));
    switch (kind) {
        case Kind::IidPerBundle: {
            ValuationProfile v(n_bidders, menu.items(), v_lo, v_hi);
            for (int n = 0; n < n_bidders; ++n)
                for (int b = 0; b < menu.size(); ++b) {
                    const auto [lo, hi] = bundle_ranges.empty()
                                              ? std::pair<double, double>{v_lo, v_hi}
                                              : bundle_ranges[b];
                    v.set(n, menu.bundle(b), rng.uniform(lo, hi));
                }
            return v;
        }
        case Kind::MaxCorrelated: {
            ValuationProfile v(n_bidders, menu.items(), v_lo, v_hi);
            for (int b = 0; b < menu.size(); ++b) {
                const auto [lo, hi] = bundle_ranges.empty()
                                          ? std::pair<double, double>{v_lo, v_hi}
                                          : bundle_ranges[b];
                const double x = rng.uniform(lo, hi);
                for (int n = 0; n < n_bidders; ++n) v.set(n, menu.bundle(b), x);
            }
            return v;
        }
        case Kind::TwoTierShock: {
            if (tier_k < 2 || tier_k > n_bidders)
                throw ParamError("TwoTierShock: need 2 <= k <= N");
            ValuationProfile v(n_bidders, menu.items(), 0.0, 1.0);
            const double split = 1.0 - static_cast<double>(tier_k - 1) / n_bidders;
            // choose k-1 distinct high bidders (partial Fisher-Yates)
            std::vector<int> idx(n_bidders);
            for (int i = 0; i < n_bidders; ++i) idx[i] = i;
            for (int i = 0; i < tier_k - 1; ++i) {
                const int j = i + static_cast<int>(rng.below(n_bidders - i));
                std::swap(idx[i], idx[j]);
            }
            const double high = rng.uniform(split, 1.0);
            const double low = rng.uniform(0.0, split);
            std::vector<char> is_high(n_bidders, 0);
            for (int i = 0; i < tier_k - 1; ++i) is_high[idx[i]] = 1;
            const Bundle target = menu.bundle(target_bundle);
            for (int n = 0; n < n_bidders; ++n)
                v.set(n, target, is_high[n] ? high : low);
            return v;
        }
        case Kind::Custom:
            if (!custom) throw ParamError("DistributionSpec: missing custom sampler");
            return custom(menu, seed, trial);
    }
    throw ParamError("DistributionSpec: unknown kind");
}

DistributionSpec make_two_tier_spec(int k, int n_bidders, int target_bundle) {
    if (k < 2 || k > n_bidders) throw ParamError("make_two_tier_spec: need 2 <= k <= N");
    DistributionSpec spec;
    spec.kind = DistributionSpec::Kind::TwoTierShock;
    spec.n_bidders = n_bidders;
    spec.tier_k = k;
    spec.target_bundle = target_bundle;
    return spec;
}

BoundReport random_bidder_bound_report(const DistributionSpec& spec, const Menu& menu, int k,
                                       long long trials, std::uint64_t seed) {
    BoundReport rep;
    rep.trials = trials;
    rep.slack = static_cast<double>(k - 1) * menu.size() * spec.v_hi / spec.n_bidders;
    Accumulator lhs, rhs, diff;
    for (long long t = 0; t < trials; ++t) {
        const ValuationProfile v = spec.sample(menu, seed, t);
        const double rk = rank_guarantee(v, menu, k);
        Rng pick(derive_seed(seed, 0x5242'0000ull + static_cast<std::uint64_t>(t)));
        const int star = static_cast<int>(pick.below(spec.n_bidders));
        std::vector<double> w(menu.size());
        for (int b = 0; b < menu.size(); ++b) w[b] = v.value(star, menu.bundle(b));
        const double best = solve_wdp(menu, w).objective;
        lhs.add(rk);
        rhs.add(best);
        diff.add(rk - (best - rep.slack));
    }
    rep.lhs_mean = lhs.mean();
    rep.lhs_se = lhs.se();
    rep.rhs_mean = rhs.mean();
    rep.rhs_se = rhs.se();
    rep.diff_mean = diff.mean();
    rep.diff_se = diff.se();
    rep.holds = rep.diff_mean >= -3.0 * rep.diff_se;
    return rep;
}

GapReport surplus_gap_report(const DistributionSpec& spec, const Menu& menu, int k,
                             long long trials, std::uint64_t seed, bool use_complete_menu) {
    GapReport rep;
    rep.label = "spot-check";
    rep.trials = trials;
    rep.slack = static_cast<double>(k - 1) * menu.size() * spec.v_hi / spec.n_bidders;
    Accumulator rk_acc, v_acc, gap_acc, diff_acc;
    for (long long t = 0; t < trials; ++t) {
        const ValuationProfile v = spec.sample(menu, seed, t);
        const double rk = rank_guarantee(v, menu, k);
        const double surplus = use_complete_menu
                                   ? complete_menu_surplus(v, menu.mode()).value
                                   : efficient_surplus(v, menu).value;
        rk_acc.add(rk);
        v_acc.add(surplus);
        gap_acc.add(surplus - rk);
        diff_acc.add(rk - (surplus - rep.slack));
    }
    rep.rk_mean = rk_acc.mean();
    rep.rk_se = rk_acc.se();
    rep.v_mean = v_acc.mean();
    rep.v_se = v_acc.se();
    rep.gap_mean = gap_acc.mean();
    rep.gap_se = gap_acc.se();
    rep.holds = diff_acc.mean() >= -3.0 * diff_acc.se();
    return rep;
}

MeanReport rank_guarantee_mean(const DistributionSpec& spec, const Menu& menu, int k,
                               long long trials, std::uint64_t seed) {
    Accumulator acc;
    for (long long t = 0; t < trials; ++t)
        acc.add(rank_guarantee(spec.sample(menu, seed, t), menu, k));
    return {acc.mean(), acc.se(), trials};
}

}  // namespace casa
