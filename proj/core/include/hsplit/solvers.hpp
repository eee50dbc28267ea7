#ifndef HSPLIT_SOLVERS_HPP
#define HSPLIT_SOLVERS_HPP

#include <vector>

#include "hsplit/instance.hpp"
#include "hsplit/oracle.hpp"
#include "hsplit/solve_result.hpp"

namespace hsplit {

struct SolverLimits {
    // Largest part the exact set-partition fallbacks will enumerate
    // (merge_subroutine, dividing gains).
    int max_partition_elements = 12;
    // Largest number of parts the fusion atomizer will brute-force over.
    int max_subset_parts = 24;
};

// Every solver decides the instance exactly and reports achieved_h, the
// maximum h-index over all refinements its operation/variant/k admit
// (matching oracle_solve).  Solvers throw std::invalid_argument when the
// instance's operation/variant/measure do not match.

// Atomizing, plain, sum/union.  Linear in n + m per target.
SolveResult atomize_solve(const ProblemInstance& inst);

// Atomizing, conservative (at most k parts changed), sum/union.  Greedy on
// per-part gains selected by counting sort.
SolveResult atomize_conservative_solve(const ProblemInstance& inst);

// Extracting, plain, sum/union: extract every article whose singleton
// citation count reaches the target.
SolveResult extract_solve(const ProblemInstance& inst);

// Extracting, cautious (at most k extractions), sum/union: an extraction is
// applied only when singleton and remainder both keep the target.  Uses an
// amortized citer-count array so each probe costs O(indegree).
SolveResult extract_cautious_solve(const ProblemInstance& inst);

// Extracting, conservative (at most k parts changed), sum/union: full
// extraction sets are computed per part, the k most profitable parts win.
SolveResult extract_conservative_solve(const ProblemInstance& inst);

// True iff some set partition of `articles` has h-index >= h under the
// measure (fusion counts citers outside `articles` plus citing blocks).
// Exhaustive; |articles| is capped by limits.max_partition_elements.
bool merge_subroutine(const CitationGraph& g, const std::vector<int>& articles,
                      int h, Measure measure, const SolverLimits& limits = {});

// Dividing, plain or conservative, sum/union.  Per-part gains are computed
// by exact set-partition enumeration (bounded by limits); plain instances
// run as conservative with k = |P|.
SolveResult divide_conservative_solve(const ProblemInstance& inst,
                                      const SolverLimits& limits = {});

// Atomizing, plain, fusion.  Safe pre-atomization, an independent-set
// shortcut once enough undecided parts exist, and otherwise a brute force
// over atomize-subsets (bounded by limits.max_subset_parts).
SolveResult atomize_fusion_solve(const ProblemInstance& inst,
                                 const SolverLimits& limits = {});

// Routes the instance to the matching specialized solver, or to oracle_solve
// for the combinations with no known polynomial/FPT algorithm
// (cautious dividing; every fusion problem except plain atomizing).
SolveResult solve(const ProblemInstance& inst, const SolverLimits& limits = {},
                  const OracleLimits& oracle_limits = {});

// True iff `solve` would dispatch to oracle_solve.
bool solve_uses_oracle(const ProblemInstance& inst);

}  // namespace hsplit

#endif
