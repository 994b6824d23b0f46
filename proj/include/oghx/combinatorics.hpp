#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace oghx {

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n. Throws
/// std::overflow_error if the value does not fit in 63 bits.
inline std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    __int128 acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::int64_t>::max())
            throw std::overflow_error("binomial coefficient overflows int64");
    }
    return static_cast<std::int64_t>(acc);
}

/// Calls fn(subset) for every k-subset of {0, ..., n-1} in lexicographic
/// order. `subset` is strictly increasing. Stops early if fn returns false.
template <typename Fn>
bool for_each_combination(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return true;
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    while (true) {
        if (!fn(static_cast<const std::vector<int>&>(subset))) return false;
        int i = k - 1;
        while (i >= 0 && subset[i] == n - k + i) --i;
        if (i < 0) return true;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
}

/// Colexicographic rank of a strictly increasing subset: sum of C(s_i, i+1).
inline std::int64_t colex_rank(const std::vector<int>& subset) {
    std::int64_t rank = 0;
    for (std::size_t i = 0; i < subset.size(); ++i)
        rank += binom(subset[i], static_cast<std::int64_t>(i) + 1);
    return rank;
}

}  // namespace oghx
