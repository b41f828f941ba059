#include "casa/matching.hpp"

#include <limits>

#include "casa/errors.hpp"

namespace casa {

AssignmentResult max_weight_assignment(const std::vector<std::vector<double>>& value) {
    const int n = static_cast<int>(value.size());
    if (n == 0) return {{}, 0.0};
    const int m = static_cast<int>(value[0].size());
    if (n > m) throw InfeasibleError("max_weight_assignment: more rows than columns");
    for (const auto& row : value)
        if (static_cast<int>(row.size()) != m)
            throw ParamError("max_weight_assignment: ragged value matrix");

    const double kInf = std::numeric_limits<double>::infinity();
    // Shortest augmenting paths on the cost matrix a = -value, 1-based with
    // a virtual 0 column.
    std::vector<double> u(n + 1, 0.0), pot(m + 1, 0.0);
    std::vector<int> p(m + 1, 0), way(m + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(m + 1, kInf);
        std::vector<char> used(m + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = -1;
            double delta = kInf;
            for (int j = 1; j <= m; ++j) {
                if (used[j]) continue;
                const double cur = -value[i0 - 1][j - 1] - u[i0] - pot[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= m; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    pot[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }

    AssignmentResult out;
    out.column_of.assign(n, -1);
    for (int j = 1; j <= m; ++j)
        if (p[j] != 0) out.column_of[p[j] - 1] = j - 1;
    // Re-sum in row order so equal assignments always produce the identical
    // floating-point total.
    for (int i = 0; i < n; ++i) out.total += value[i][out.column_of[i]];
    return out;
}

AssignmentResult match_bundles_to_bidders(const ValuationProfile& v, const Menu& menu,
                                          const std::vector<int>& selection) {
    if (static_cast<int>(selection.size()) > v.bidders())
        throw InfeasibleError("match_bundles_to_bidders: more bundles than bidders");
    std::vector<std::vector<double>> value(selection.size(),
                                           std::vector<double>(v.bidders()));
    for (std::size_t r = 0; r < selection.size(); ++r) {
        const Bundle& b = menu.bundle(selection[r]);
        for (int n = 0; n < v.bidders(); ++n) value[r][n] = v.value(n, b);
    }
    return max_weight_assignment(value);
}

}  // namespace casa
