#pragma once

#include <map>
#include <vector>

#include "quongram/combin/bracketing.hpp"
#include "quongram/symring/bigint.hpp"

namespace quongram::combin {

/// c_1, c_2, ..., c_n by the linear recurrence
/// (n+1)c_{n+1} = 3(2n-1)c_n - (n-2)c_{n-1}.
inline std::vector<Int> schroeder_numbers(int n) {
    std::vector<Int> c(static_cast<std::size_t>(n) + 1, 0);
    if (n >= 1) c[1] = 1;
    if (n >= 2) c[2] = 1;
    for (int m = 2; m < n; ++m) {
        Int t = 3 * Int(2 * m - 1) * c[m] - Int(m - 2) * c[m - 1];
        c[m + 1] = t / (m + 1);
    }
    c.erase(c.begin());
    return c;  // c[0] = c_1
}

struct SchroederCounts {
    Int c_n;
    std::map<int, Int> c_nk;  // k brackets total (outer included) -> count
};

/// c_n by the recurrence; c_{n,k} by direct enumeration of bracketings.
inline SchroederCounts schroeder_counts(int n) {
    SchroederCounts out;
    out.c_n = schroeder_numbers(n).back();
    for (auto& b : all_bracketings(n, /*with_outer=*/true)) out.c_nk[b.bracket_count()] += 1;
    return out;
}

/// Closed form for c_{n,k} consistent with the enumerated values:
/// binom(n+k-1,k) binom(n-2,k-1) / n.
inline Int schroeder_cnk_closed(int n, int k) {
    Int v = binomial(n + k - 1, k) * binomial(n - 2, k - 1);
    return v / n;
}

}  // namespace quongram::combin
