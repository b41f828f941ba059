#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <vector>

#include "casa/errors.hpp"

namespace casa {

// k-th largest element counting multiplicity (k = 1 is the maximum).
inline double kth_highest(std::span<const double> values, int k) {
    if (k < 1 || static_cast<std::size_t>(k) > values.size())
        throw ParamError("kth_highest: k out of range");
    std::vector<double> v(values.begin(), values.end());
    std::nth_element(v.begin(), v.begin() + (k - 1), v.end(), std::greater<>());
    return v[k - 1];
}

inline double kth_highest(const std::vector<double>& values, int k) {
    return kth_highest(std::span<const double>(values), k);
}

}  // namespace casa
