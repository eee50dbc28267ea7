#ifndef HSPLIT_SOLVE_RESULT_HPP
#define HSPLIT_SOLVE_RESULT_HPP

#include <optional>

#include "hsplit/partition.hpp"

namespace hsplit {

// Outcome of solving one instance.  achieved_h is the maximum h-index any
// refinement satisfying the instance's operation/variant/k admits, whether
// or not it reaches the requested h; the witness is present iff it does.
struct SolveResult {
    bool feasible = false;
    std::optional<Refinement> refinement;  // present iff feasible
    int achieved_h = 0;
    int operations_used = 0;  // |R| - |P| for the witness, 0 if infeasible
    int parts_changed = 0;    // |P \ R| for the witness, 0 if infeasible
};

}  // namespace hsplit

#endif
