#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "casa/bundle.hpp"
#include "casa/errors.hpp"

namespace casa {

// How a selection of menu bundles is judged feasible.
//  Disjoint:    bundles must be pairwise disjoint.
//  QuantityCap: total bundle size must not exceed the item count
//               (homogeneous-goods reading; bundles may overlap).
enum class Feasibility { Disjoint, QuantityCap };

// An ordered list of distinct non-empty bundles offered for bidding.
class Menu {
public:
    Menu(int n_items, std::vector<Bundle> bundles, Feasibility mode = Feasibility::Disjoint)
        : n_items_(n_items), bundles_(std::move(bundles)), mode_(mode) {
        if (n_items < 1 || n_items > Bundle::kMaxItems)
            throw ParamError("Menu: item count out of range");
        if (bundles_.empty()) throw ParamError("Menu: needs at least one bundle");
        const Bundle universe = Bundle::all(n_items);
        for (std::size_t i = 0; i < bundles_.size(); ++i) {
            if (bundles_[i].empty()) throw ParamError("Menu: empty bundle not allowed");
            if (!bundles_[i].subset_of(universe))
                throw ParamError("Menu: bundle outside item set");
            for (std::size_t j = 0; j < i; ++j)
                if (bundles_[i] == bundles_[j]) throw ParamError("Menu: duplicate bundle");
        }
    }

    // Every non-empty subset of {0..n_items-1}, mask-ascending.
    static Menu complete(int n_items, Feasibility mode = Feasibility::Disjoint) {
        if (n_items < 1 || n_items > 10)
            throw SizeError("Menu::complete: item count out of range (max 10)");
        std::vector<Bundle> bs;
        for (std::uint32_t m = 1; m < (1u << n_items); ++m) bs.push_back(Bundle(m));
        return Menu(n_items, std::move(bs), mode);
    }

    int items() const { return n_items_; }
    int size() const { return static_cast<int>(bundles_.size()); }
    const Bundle& bundle(int i) const { return bundles_[i]; }
    const std::vector<Bundle>& bundles() const { return bundles_; }
    Feasibility mode() const { return mode_; }

    int index_of(Bundle b) const {
        for (int i = 0; i < size(); ++i)
            if (bundles_[i] == b) return i;
        return -1;
    }

    // True iff the index set is a feasible allocation. The empty selection
    // is always feasible. Rejects invalid or duplicate indices.
    bool feasible(const std::vector<int>& selection) const {
        std::uint32_t used = 0;
        int quantity = 0;
        std::vector<char> seen(bundles_.size(), 0);
        for (int idx : selection) {
            if (idx < 0 || idx >= size()) throw ParamError("Menu::feasible: bad bundle index");
            if (seen[idx]) throw ParamError("Menu::feasible: duplicate index");
            seen[idx] = 1;
            const Bundle& b = bundles_[idx];
            if (mode_ == Feasibility::Disjoint) {
                if (used & b.mask()) return false;
                used |= b.mask();
            } else {
                quantity += b.size();
                if (quantity > n_items_) return false;
            }
        }
        return true;
    }

private:
    int n_items_;
    std::vector<Bundle> bundles_;
    Feasibility mode_;
};

// Visits every feasible selection exactly once, in lexicographic order on
// ascending index sequences ([], [0], [0,1], ..., [1], ...). Feasibility is
// closed under subsets in both modes, so pruning at an infeasible extension
// is exact. The cap bounds the menu size, not the number of selections.
template <class Visit>
void for_each_feasible(const Menu& menu, Visit&& visit, int menu_cap = 20) {
    if (menu.size() > menu_cap)
        throw SizeError("for_each_feasible: menu size exceeds enumeration cap");
    std::vector<int> sel;
    std::uint32_t used = 0;
    int quantity = 0;
    auto rec = [&](auto&& self, int next) -> void {
        visit(std::as_const(sel));
        for (int i = next; i < menu.size(); ++i) {
            const Bundle& b = menu.bundle(i);
            if (menu.mode() == Feasibility::Disjoint) {
                if (used & b.mask()) continue;
            } else {
                if (quantity + b.size() > menu.items()) continue;
            }
            sel.push_back(i);
            used |= b.mask();
            quantity += b.size();
            self(self, i + 1);
            sel.pop_back();
            used &= ~b.mask();
            quantity -= b.size();
        }
    };
    rec(rec, 0);
}

inline std::vector<std::vector<int>> enumerate_feasible(const Menu& menu, int menu_cap = 20) {
    std::vector<std::vector<int>> out;
    for_each_feasible(menu, [&](const std::vector<int>& sel) { out.push_back(sel); }, menu_cap);
    return out;
}

}  // namespace casa
