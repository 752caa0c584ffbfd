#pragma once

#include <numeric>
#include <vector>

namespace tdcol {

// c = {0, 1, ..., k-1}, the lexicographically first k-subset of {0..n-1}.
inline std::vector<int> first_combination(int k) {
    std::vector<int> c(k);
    std::iota(c.begin(), c.end(), 0);
    return c;
}

// Advances c to the next k-subset of {0..n-1} in lexicographic order.
inline bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace tdcol
