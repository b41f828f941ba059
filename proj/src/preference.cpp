#include "casa/preference.hpp"

#include <algorithm>
#include <cmath>

#include "casa/errors.hpp"
#include "casa/order_stats.hpp"
#include "casa/rng.hpp"
#include "casa/surplus.hpp"
#include "casa/wdp.hpp"

namespace casa {
namespace {

double qfloor(double x, int bits) {
    const double scale = std::ldexp(1.0, bits);
    return std::floor(x * scale) / scale;
}

void check_items(const PreferenceClass& pc) {
    if (pc.n_items < 1 || pc.n_items > 5)
        throw SizeError("preference class: full-menu validation supports up to 5 items");
    if (pc.kind == PreferenceClass::Kind::PartitionedComplements) {
        Bundle covered;
        for (const Bundle& b : pc.partition) {
            if (b.empty()) throw ParamError("preference class: empty partition block");
            if (!covered.disjoint(b))
                throw ParamError("preference class: overlapping partition blocks");
            covered = covered.unite(b);
        }
        if (covered != Bundle::all(pc.n_items))
            throw ParamError("preference class: partition must cover all items");
    }
}

// One vector drawn over all non-empty bundles; values are dyadic.
void draw_vector(const PreferenceClass& pc, Rng& rng, ValuationProfile& v, int bidder) {
    const int M = pc.n_items;
    const int bits = pc.lattice_bits;
    const std::uint32_t full = (1u << M) - 1u;

    switch (pc.kind) {
        case PreferenceClass::Kind::WeakSubstitutes: {
            std::vector<double> item(M);
            for (int i = 0; i < M; ++i) item[i] = qfloor(rng.u01() / M, bits);
            for (std::uint32_t mask = 1; mask <= full; ++mask) {
                const Bundle b(mask);
                double sum = 0.0;
                for (int i : b.items()) sum += item[i];
                if (b.size() == 1) {
                    v.set(bidder, b, sum);
                } else {
                    const double theta = qfloor(pc.theta_lo + rng.u01() * (1.0 - pc.theta_lo), bits);
                    v.set(bidder, b, theta * sum);
                }
            }
            break;
        }
        case PreferenceClass::Kind::WeakComplements: {
            const double grand = qfloor(0.25 + 0.75 * rng.u01(), bits);
            for (std::uint32_t mask = 1; mask <= full; ++mask) {
                const Bundle b(mask);
                if (mask == full) {
                    v.set(bidder, b, grand);
                } else {
                    // <= grand * |b|/M, so any disjoint family sums below grand
                    v.set(bidder, b, qfloor(grand * rng.u01() * b.size() / M, bits + 8));
                }
            }
            break;
        }
        case PreferenceClass::Kind::PartitionedComplements: {
            // weak complements inside each block, additive across blocks
            std::vector<double> block_grand(pc.partition.size());
            std::vector<std::vector<double>> block_vals(pc.partition.size());
            for (std::size_t j = 0; j < pc.partition.size(); ++j) {
                const Bundle& blk = pc.partition[j];
                block_grand[j] =
                    qfloor((0.25 + 0.75 * rng.u01()) * blk.size() / M, bits);
                block_vals[j].assign(1u << M, 0.0);
                for (std::uint32_t sub = 1; sub <= full; ++sub) {
                    if ((sub & blk.mask()) != sub) continue;  // not inside the block
                    if (sub == blk.mask())
                        block_vals[j][sub] = block_grand[j];
                    else
                        block_vals[j][sub] = qfloor(
                            block_grand[j] * rng.u01() * Bundle(sub).size() / blk.size(),
                            bits + 8);
                }
            }
            for (std::uint32_t mask = 1; mask <= full; ++mask) {
                double total = 0.0;
                for (std::size_t j = 0; j < pc.partition.size(); ++j)
                    total += block_vals[j][mask & pc.partition[j].mask()];
                v.set(bidder, Bundle(mask), total);
            }
            break;
        }
        case PreferenceClass::Kind::Homogeneous: {
            std::vector<double> per_size(M + 1, 0.0);
            for (int l = 1; l <= M; ++l) per_size[l] = qfloor(rng.u01(), bits);
            for (std::uint32_t mask = 1; mask <= full; ++mask)
                v.set(bidder, Bundle(mask), per_size[Bundle(mask).size()]);
            break;
        }
    }
}

// All set partitions of `elems` into non-empty parts.
template <class Visit>
void for_each_partition(const std::vector<int>& elems, Visit&& visit) {
    std::vector<Bundle> parts;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == elems.size()) {
            visit(std::as_const(parts));
            return;
        }
        const std::uint32_t bit = 1u << elems[i];
        for (std::size_t p = 0; p < parts.size(); ++p) {
            parts[p] = Bundle(parts[p].mask() | bit);
            self(self, i + 1);
            parts[p] = Bundle(parts[p].mask() & ~bit);
        }
        parts.push_back(Bundle(bit));
        self(self, i + 1);
        parts.pop_back();
    };
    rec(rec, 0);
}

}  // namespace

ValuationProfile gen_valuation(const PreferenceClass& pc, int n_bidders, std::uint64_t seed,
                               long long trial, bool identical_bidders) {
    check_items(pc);
    ValuationProfile v(n_bidders, pc.n_items, 0.0, 1.0);
    Rng rng(derive_seed(seed, 0x7076'0000ull + static_cast<std::uint64_t>(trial)));
    draw_vector(pc, rng, v, 0);
    for (int n = 1; n < n_bidders; ++n) {
        if (identical_bidders) {
            for (std::uint32_t mask = 1; mask < (1u << pc.n_items); ++mask)
                v.set(n, Bundle(mask), v.value(0, Bundle(mask)));
        } else {
            draw_vector(pc, rng, v, n);
        }
    }
    return v;
}

bool satisfies_class(const PreferenceClass& pc, const ValuationProfile& v, int bidder) {
    check_items(pc);
    const int M = pc.n_items;
    const std::uint32_t full = (1u << M) - 1u;

    switch (pc.kind) {
        case PreferenceClass::Kind::WeakSubstitutes: {
            for (std::uint32_t mask = 1; mask <= full; ++mask) {
                double sum = 0.0;
                for (int i : Bundle(mask).items()) sum += v.value(bidder, Bundle({i}));
                if (!(sum >= v.value(bidder, Bundle(mask)))) return false;
            }
            return true;
        }
        case PreferenceClass::Kind::WeakComplements: {
            const double grand = v.value(bidder, Bundle(full));
            bool ok = true;
            const Menu complete = Menu::complete(M);
            for_each_feasible(
                complete,
                [&](const std::vector<int>& sel) {
                    double total = 0.0;
                    for (int i : sel) total += v.value(bidder, complete.bundle(i));
                    if (!(total <= grand)) ok = false;
                },
                complete.size());
            return ok;
        }
        case PreferenceClass::Kind::PartitionedComplements: {
            for (const Bundle& blk : pc.partition) {
                bool ok = true;
                for_each_partition(blk.items(), [&](const std::vector<Bundle>& parts) {
                    double total = 0.0;
                    for (const Bundle& p : parts) total += v.value(bidder, p);
                    if (!(total <= v.value(bidder, blk))) ok = false;
                });
                if (!ok) return false;
            }
            for (std::uint32_t mask = 1; mask <= full; ++mask) {
                double across = 0.0;
                for (const Bundle& blk : pc.partition)
                    across += v.value(bidder, Bundle(mask).intersect(blk));
                if (!(across >= v.value(bidder, Bundle(mask)))) return false;
            }
            return true;
        }
        case PreferenceClass::Kind::Homogeneous: {
            std::vector<double> seen(M + 1);
            std::vector<char> have(M + 1, 0);
            for (std::uint32_t mask = 1; mask <= full; ++mask) {
                const int sz = Bundle(mask).size();
                const double val = v.value(bidder, Bundle(mask));
                if (!have[sz]) {
                    seen[sz] = val;
                    have[sz] = 1;
                } else if (val != seen[sz]) {
                    return false;
                }
            }
            return true;
        }
    }
    return false;
}

MenuPlan build_menu(const PreferenceClass& pc) {
    check_items(pc);
    const int M = pc.n_items;
    switch (pc.kind) {
        case PreferenceClass::Kind::WeakSubstitutes: {
            std::vector<Bundle> singles;
            for (int i = 0; i < M; ++i) singles.push_back(Bundle({i}));
            return {Menu(M, singles), M + 1};
        }
        case PreferenceClass::Kind::WeakComplements:
            return {Menu(M, {Bundle::all(M)}), 2};
        case PreferenceClass::Kind::PartitionedComplements:
            return {Menu(M, pc.partition), static_cast<int>(pc.partition.size()) + 1};
        case PreferenceClass::Kind::Homogeneous: {
            // floor(M/l) copies of each size l, materialized as consecutive
            // item blocks (identity of items is irrelevant under homogeneity)
            std::vector<Bundle> bundles;
            for (int l = 1; l <= M; ++l)
                for (int c = 0; c * l + l <= M; ++c) {
                    Bundle b;
                    for (int i = c * l; i < c * l + l; ++i) b = b.unite(Bundle({i}));
                    bundles.push_back(b);
                }
            Menu menu(M, bundles, Feasibility::QuantityCap);
            return {menu, menu.size() + 1};
        }
    }
    throw ParamError("build_menu: unknown class");
}

bool check_expost_sufficiency(const ValuationProfile& v, int bidder, const Menu& menu) {
    if (v.items() > 5) throw SizeError("check_expost_sufficiency: supports up to 5 items");
    const Menu complete = Menu::complete(v.items(), menu.mode());
    std::vector<double> w_full(complete.size()), w_menu(menu.size());
    for (int i = 0; i < complete.size(); ++i) w_full[i] = v.value(bidder, complete.bundle(i));
    for (int i = 0; i < menu.size(); ++i) w_menu[i] = v.value(bidder, menu.bundle(i));
    const double full_opt = solve_wdp(complete, w_full, complete.size()).objective;
    const double menu_opt = solve_wdp(menu, w_menu, menu.size()).objective;
    return full_opt == menu_opt;
}

BoundReport sufficiency_surplus_check(const PreferenceClass& pc, const Menu& menu, int k,
                                      int n_bidders, long long trials, std::uint64_t seed) {
    if (n_bidders < pc.n_items)
        throw ParamError("sufficiency_surplus_check: need at least M bidders");
    if (k > n_bidders) throw ParamError("sufficiency_surplus_check: k exceeds bidder count");
    BoundReport rep;
    rep.label = "sufficiency";
    rep.trials = trials;
    rep.slack = static_cast<double>(k - 1) * menu.size() * 1.0 / n_bidders;
    double sum_l = 0, sumsq_l = 0, sum_r = 0, sumsq_r = 0, sum_d = 0, sumsq_d = 0;
    for (long long t = 0; t < trials; ++t) {
        const ValuationProfile v = gen_valuation(pc, n_bidders, seed, t, true);
        const double rk = rank_guarantee(v, menu, k, menu.size());
        const double vstar = complete_menu_surplus(v, menu.mode()).value;
        const double d = rk - (vstar - rep.slack);
        sum_l += rk;
        sumsq_l += rk * rk;
        sum_r += vstar;
        sumsq_r += vstar * vstar;
        sum_d += d;
        sumsq_d += d * d;
    }
    const double n = static_cast<double>(trials);
    auto finish = [&](double s, double sq, double& mean, double& se) {
        mean = s / n;
        const double var = (sq - n * mean * mean) / (n - 1);
        se = std::sqrt(std::max(var, 0.0) / n);
    };
    finish(sum_l, sumsq_l, rep.lhs_mean, rep.lhs_se);
    finish(sum_r, sumsq_r, rep.rhs_mean, rep.rhs_se);
    finish(sum_d, sumsq_d, rep.diff_mean, rep.diff_se);
    rep.holds = rep.diff_mean >= -3.0 * rep.diff_se;
    return rep;
}

}  // namespace casa
