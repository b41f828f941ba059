#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "casa/errors.hpp"

namespace casa {

// A set of item indices in {0..M-1}, canonical as a bitmask. Equality is
// extensional by construction: two bundles with the same members compare
// equal regardless of how they were built.
class Bundle {
public:
    static constexpr int kMaxItems = 31;

    constexpr Bundle() = default;
    explicit constexpr Bundle(std::uint32_t mask) : mask_(mask) {}

    Bundle(std::initializer_list<int> items) {
        for (int i : items) add(i);
    }

    static Bundle of(const std::vector<int>& items) {
        Bundle b;
        for (int i : items) b.add(i);
        return b;
    }

    // The full item set {0..n_items-1}.
    static Bundle all(int n_items) {
        if (n_items < 0 || n_items > kMaxItems)
            throw ParamError("Bundle::all: item count out of range");
        return Bundle(n_items == 0 ? 0u : ((1u << n_items) - 1u));
    }

    bool empty() const { return mask_ == 0; }
    int size() const { return std::popcount(mask_); }
    bool contains(int item) const { return (mask_ >> item) & 1u; }
    bool disjoint(Bundle o) const { return (mask_ & o.mask_) == 0; }
    bool subset_of(Bundle o) const { return (mask_ & ~o.mask_) == 0; }
    Bundle unite(Bundle o) const { return Bundle(mask_ | o.mask_); }
    Bundle intersect(Bundle o) const { return Bundle(mask_ & o.mask_); }
    std::uint32_t mask() const { return mask_; }

    std::vector<int> items() const {
        std::vector<int> out;
        for (int i = 0; i <= kMaxItems; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int i : items()) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        }
        return s + "}";
    }

    friend auto operator<=>(const Bundle&, const Bundle&) = default;

private:
    void add(int item) {
        if (item < 0 || item >= kMaxItems)
            throw ParamError("Bundle: item index out of range: " + std::to_string(item));
        mask_ |= (1u << item);
    }

    std::uint32_t mask_ = 0;
};

}  // namespace casa
