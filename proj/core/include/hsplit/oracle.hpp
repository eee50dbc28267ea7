#ifndef HSPLIT_ORACLE_HPP
#define HSPLIT_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "hsplit/instance.hpp"
#include "hsplit/solve_result.hpp"

namespace hsplit {

struct OracleLimits {
    // Enumeration aborts with BoundExceeded once this many refinements
    // have been produced.
    uint64_t max_refinements = 4'000'000;
};

// Streams every refinement of the profile that satisfies the structural
// constraints of (op, variant, k), each exactly once, in a deterministic
// order.  k is the budget for conservative/cautious and ignored for plain.
// visit returns false to stop early; the return value is false iff stopped.
// Throws BoundExceeded when the stream exceeds limits.max_refinements.
bool enumerate_refinements(const Profile& profile, Operation op, Variant variant,
                           std::optional<int> k, const OracleLimits& limits,
                           const std::function<bool(const Partition&)>& visit);

// Number of refinements enumerate_refinements would yield.
uint64_t count_refinements(const Profile& profile, Operation op, Variant variant,
                           std::optional<int> k, const OracleLimits& limits = {});

// Exhaustive reference solver: evaluates the h-index of every refinement and
// reports the maximum, witnessed by the canonically smallest optimum.
SolveResult oracle_solve(const ProblemInstance& inst, const OracleLimits& limits = {});

}  // namespace hsplit

#endif
