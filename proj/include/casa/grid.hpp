#pragma once

#include <cmath>

#include "casa/errors.hpp"

namespace casa {

// The finite bid grid {0, eps, 2*eps, ..., max_ticks*eps}. All engine
// arithmetic runs on integer ticks; doubles appear only at the reporting
// boundary, so replays are bit-exact by construction.
class PriceGrid {
public:
    PriceGrid(double epsilon, double max_price) : epsilon_(epsilon), max_price_(max_price) {
        if (!(epsilon > 0.0) || !std::isfinite(epsilon))
            throw ParamError("PriceGrid: epsilon must be positive and finite");
        if (!(max_price >= epsilon) || !std::isfinite(max_price))
            throw ParamError("PriceGrid: max_price must be at least one step");
        max_ticks_ = static_cast<int>(std::floor(max_price / epsilon + kGuard));
    }

    double epsilon() const { return epsilon_; }
    double max_price() const { return max_price_; }
    int max_ticks() const { return max_ticks_; }
    double price(int ticks) const { return ticks * epsilon_; }
    bool valid_tick(int t) const { return 0 <= t && t <= max_ticks_; }

    // Largest tick whose price is <= x (clamped to the grid).
    int floor_ticks(double x) const {
        if (x <= 0.0) return 0;
        int t = static_cast<int>(std::floor(x / epsilon_ + kGuard));
        return t > max_ticks_ ? max_ticks_ : t;
    }

    // Nearest tick (clamped).
    int nearest_ticks(double x) const {
        if (x <= 0.0) return 0;
        int t = static_cast<int>(std::floor(x / epsilon_ + 0.5));
        return t > max_ticks_ ? max_ticks_ : t;
    }

    // Largest tick whose price is strictly below x; -1 when none exists.
    int ticks_strictly_below(double x) const {
        if (x <= 0.0) return -1;
        const double q = x / epsilon_;
        int t = static_cast<int>(std::floor(q + kGuard));
        if (t >= q - kGuard) --t;  // x sits (numerically) on the grid
        if (t > max_ticks_) t = max_ticks_;
        return t;
    }

private:
    // Absolute guard on the tick scale; forgives last-ulp division error
    // while staying far below one grid step.
    static constexpr double kGuard = 1e-9;

    double epsilon_;
    double max_price_;
    int max_ticks_;
};

}  // namespace casa
