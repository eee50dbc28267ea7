// Instance generators that re-encode three classical hard problems as
// citation-profile splitting questions.  They are used for adversarial
// testing: a brute-force answer to the source problem must agree with the
// oracle's answer on the generated instance.
//
// Source-problem text formats (see the parse_* functions):
//   bin packing   `sizes 3 2 2 1` / `bins 2` / `capacity 4` lines
//   3-CNF         DIMACS cnf (`p cnf <vars> <clauses>`, clauses of 3 literals)
//   graphs        edge list `<u> <v>` with 1-based vertices, optional
//                 `vertices <n>` line, or DIMACS `p edge <n> <m>` + `e u v`
#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hsplit/instance.hpp"

namespace hsplit {

// Simple undirected graph on vertices 1..vertex_count.
struct UndirectedGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // normalized u < v, sorted, distinct

    // Validates and normalizes; throws ParseError on loops, duplicate edges,
    // or out-of-range endpoints.
    static UndirectedGraph make(int vertex_count,
                                std::vector<std::pair<int, int>> edges);
};

// Reads either a DIMACS graph (`p edge n m` header, `e u v` lines) or a bare
// edge list (`vertices n` line optional, otherwise n = max endpoint).
UndirectedGraph parse_undirected(std::istream& in);

struct BinPacking {
    std::vector<int> sizes;  // positive item sizes
    int bins = 0;
    int capacity = 0;

    int total_size() const;              // s*
    int slack() const;                   // bins * capacity - s*
};

BinPacking parse_bin_packing(std::istream& in);

// 3-CNF formula; literal +i / -i refers to variable i (1-based).  Clauses may
// repeat literals (this is how shorter clauses are encoded).
struct CnfFormula {
    int variable_count = 0;
    std::vector<std::array<int, 3>> clauses;
};

CnfFormula parse_cnf(std::istream& in);

struct ReductionResult {
    ProblemInstance instance;
    std::vector<std::string> warnings;
};

// Packing ℓ bins of capacity B becomes cautious dividing under the sum
// measure: one merged part holds an article per item (in-degree = item size)
// plus unit fillers soaking up the slack, so splitting it into ℓ blocks that
// all reach B citations is exactly an equal-capacity packing.  Singleton
// helper articles lift the h-index target to B.  Degenerate parameter
// choices (capacity ≥ total size, or bins ≥ capacity) still generate an
// instance but are reported as warnings because the equivalence argument
// needs them the other way around.  Throws Error when slack is negative.
ReductionResult reduce_bin_packing(const BinPacking& bp);

// Satisfiability becomes plain atomizing under the fusion measure: each
// variable contributes a true part and a false part whose members cite the
// opposite part, so atomizing one side of every variable is forced, and
// clause articles only reach the target when some atomized side satisfies
// them.  Requires variables + clauses > 3.
ReductionResult reduce_three_sat(const CnfFormula& f);

// A k-clique becomes conservative atomizing under the fusion measure: every
// vertex contributes a part of ceil(C(k,2)/2) articles, every edge a
// singleton article cited by both endpoint parts, and only atomizing the k
// parts of a clique pushes C(k,2) edge articles to C(k,2) citations.  Warns
// for k < 4 (degenerate targets).  `target` may retarget the same graph at
// extracting or dividing, which switches to the cautious variant with budget
// k * (ceil(C(k,2)/2) - 1), the operation count that atomizing k parts costs.
ReductionResult reduce_clique(const UndirectedGraph& g, int k,
                              Operation target = Operation::atomizing);

}  // namespace hsplit
