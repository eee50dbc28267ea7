#include "hsplit/enumeration.hpp"

namespace hsplit {

uint64_t partition_count(int n, int max_blocks) {
    if (n == 0) return 1;
    if (max_blocks <= 0) return 0;
    // Stirling numbers of the second kind, summed over 1..max_blocks.
    std::vector<uint64_t> row(n + 1, 0);  // row[j] = S(i, j)
    row[0] = 1;
    uint64_t total = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, n); j >= 1; --j)
            row[j] = sat_add(sat_mul(static_cast<uint64_t>(j), row[j]), row[j - 1]);
        row[0] = 0;
    }
    for (int j = 1; j <= std::min(n, max_blocks); ++j) total = sat_add(total, row[j]);
    return total;
}

uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        if (r > UINT64_MAX / static_cast<uint64_t>(n - k + i)) return UINT64_MAX;
        r = r * static_cast<uint64_t>(n - k + i) / static_cast<uint64_t>(i);
    }
    return r;
}

namespace {

bool recurse(int n, int i, int used, int max_blocks,
             std::vector<std::vector<int>>& blocks,
             const std::function<bool(const std::vector<std::vector<int>>&)>& visit) {
    if (i == n) return visit(blocks);
    // Element i joins an existing block or, if room remains, opens a new one.
    for (int b = 0; b < used; ++b) {
        blocks[b].push_back(i);
        if (!recurse(n, i + 1, used, max_blocks, blocks, visit)) return false;
        blocks[b].pop_back();
    }
    if (used < max_blocks) {
        blocks.emplace_back(1, i);
        if (!recurse(n, i + 1, used + 1, max_blocks, blocks, visit)) return false;
        blocks.pop_back();
    }
    return true;
}

}  // namespace

bool for_each_set_partition(
    int n, int max_blocks,
    const std::function<bool(const std::vector<std::vector<int>>&)>& visit) {
    std::vector<std::vector<int>> blocks;
    if (n == 0) return visit(blocks);
    if (max_blocks <= 0) return true;
    return recurse(n, 0, 0, max_blocks, blocks, visit);
}

}  // namespace hsplit
