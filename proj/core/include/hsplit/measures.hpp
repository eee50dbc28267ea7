#ifndef HSPLIT_MEASURES_HPP
#define HSPLIT_MEASURES_HPP

#include <vector>

#include "hsplit/instance.hpp"

namespace hsplit {

// Citation count of one part under a measure.
//   sum    Σ_{v in part} indegree(v)
//   union  distinct citers of the part's members
//   fusion distinct citers outside the owned set, plus the number of other
//          parts of `partition` containing a citer of the part
// `partition` provides the context for fusion (it must contain `part`,
// and its elements are the owned set); sum and union ignore it.
int citations(const CitationGraph& g, const Partition& partition,
              const std::vector<int>& part, Measure measure);

// Citation count of every part of `partition`, in part order.
std::vector<int> part_citations(const CitationGraph& g,
                                const Partition& partition, Measure measure);

// Largest h such that at least h parts have >= h citations (0 if empty).
int h_index(const CitationGraph& g, const Partition& partition, Measure measure);

// Largest h such that at least h values in `counts` are >= h.
int h_index_of_counts(const std::vector<int>& counts);

}  // namespace hsplit

#endif
