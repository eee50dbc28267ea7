#ifndef HSPLIT_ENUMERATION_HPP
#define HSPLIT_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace hsplit {

// Saturating counters used only for pre-flight bound checks.
inline uint64_t sat_add(uint64_t a, uint64_t b) {
    uint64_t s = a + b;
    return s < a ? UINT64_MAX : s;
}
inline uint64_t sat_mul(uint64_t a, uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > UINT64_MAX / b) return UINT64_MAX;
    return a * b;
}

// Number of set partitions of n elements into at most max_blocks blocks
// (Bell number when max_blocks >= n), saturating.
uint64_t partition_count(int n, int max_blocks);

// C(n, k), saturating.
uint64_t binomial(int n, int k);

// Enumerates set partitions of {0..n-1} with at most max_blocks blocks via
// restricted growth strings: blocks are listed in order of their smallest
// element, so each partition appears exactly once and in canonical form.
// visit returns false to stop early.  Returns false if stopped.
bool for_each_set_partition(
    int n, int max_blocks,
    const std::function<bool(const std::vector<std::vector<int>>&)>& visit);

}  // namespace hsplit

#endif
