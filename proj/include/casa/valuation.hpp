#pragma once

#include <map>
#include <vector>

#include "casa/bundle.hpp"
#include "casa/errors.hpp"

namespace casa {

// Per-bidder bundle valuations. The empty bundle is worth 0 for every
// bidder; any non-empty bundle not explicitly set defaults to v_lo, so
// sparse fixtures stay small. All stored values lie in [v_lo, v_hi].
class ValuationProfile {
public:
    ValuationProfile(int n_bidders, int n_items, double v_lo = 0.0, double v_hi = 1.0)
        : n_bidders_(n_bidders), n_items_(n_items), v_lo_(v_lo), v_hi_(v_hi), vals_(n_bidders) {
        if (n_bidders < 1) throw ParamError("ValuationProfile: need at least one bidder");
        if (n_items < 1 || n_items > Bundle::kMaxItems)
            throw ParamError("ValuationProfile: item count out of range");
        if (!(0.0 <= v_lo && v_lo <= v_hi))
            throw ParamError("ValuationProfile: need 0 <= v_lo <= v_hi");
    }

    int bidders() const { return n_bidders_; }
    int items() const { return n_items_; }
    double v_lo() const { return v_lo_; }
    double v_hi() const { return v_hi_; }

    void set(int bidder, Bundle b, double value) {
        check_bidder(bidder);
        if (b.empty()) throw ParamError("ValuationProfile::set: empty bundle is fixed at 0");
        if (!b.subset_of(Bundle::all(n_items_)))
            throw ParamError("ValuationProfile::set: bundle outside item set");
        if (!(v_lo_ <= value && value <= v_hi_))
            throw ParamError("ValuationProfile::set: value outside [v_lo, v_hi]");
        vals_[bidder][b.mask()] = value;
    }

    double value(int bidder, Bundle b) const {
        check_bidder(bidder);
        if (b.empty()) return 0.0;
        const auto& m = vals_[bidder];
        auto it = m.find(b.mask());
        return it == m.end() ? v_lo_ : it->second;
    }

    // All bidders' values for one bundle, indexed by bidder.
    std::vector<double> bundle_values(Bundle b) const {
        std::vector<double> out(n_bidders_);
        for (int n = 0; n < n_bidders_; ++n) out[n] = value(n, b);
        return out;
    }

    // Explicitly stored entries for one bidder, mask-ascending.
    const std::map<std::uint32_t, double>& entries(int bidder) const {
        check_bidder(bidder);
        return vals_[bidder];
    }

private:
    void check_bidder(int bidder) const {
        if (bidder < 0 || bidder >= n_bidders_)
            throw ParamError("ValuationProfile: bidder index out of range");
    }

    int n_bidders_;
    int n_items_;
    double v_lo_, v_hi_;
    std::vector<std::map<std::uint32_t, double>> vals_;
};

}  // namespace casa
