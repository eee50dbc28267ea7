#include "hsplit/measures.hpp"

#include <algorithm>
#include <stdexcept>

#include "hsplit/errors.hpp"

namespace hsplit {

namespace {

int sum_citations(const CitationGraph& g, const std::vector<int>& part) {
    int total = 0;
    for (int v : part) total += g.indegree(v);
    return total;
}

int union_citations(const CitationGraph& g, const std::vector<int>& part) {
    std::vector<int> citers;
    for (int v : part)
        citers.insert(citers.end(), g.citers(v).begin(), g.citers(v).end());
    std::sort(citers.begin(), citers.end());
    citers.erase(std::unique(citers.begin(), citers.end()), citers.end());
    return static_cast<int>(citers.size());
}

// part_index_of[v]: index of v's part, or -1 for articles outside the
// partition.  Citers inside the part itself never count.
int fusion_citations(const CitationGraph& g, const std::vector<int>& part,
                     int own_part, const std::vector<int>& part_index_of) {
    std::vector<int> outside;      // citers outside the owned set
    std::vector<int> citing_part;  // other parts containing a citer
    for (int v : part) {
        for (int u : g.citers(v)) {
            int p = part_index_of[u];
            if (p == own_part) continue;
            if (p < 0)
                outside.push_back(u);
            else
                citing_part.push_back(p);
        }
    }
    std::sort(outside.begin(), outside.end());
    outside.erase(std::unique(outside.begin(), outside.end()), outside.end());
    std::sort(citing_part.begin(), citing_part.end());
    citing_part.erase(std::unique(citing_part.begin(), citing_part.end()),
                      citing_part.end());
    return static_cast<int>(outside.size() + citing_part.size());
}

std::vector<int> build_part_index(const CitationGraph& g, const Partition& partition) {
    std::vector<int> part_index_of(g.article_count(), -1);
    for (int i = 0; i < partition.part_count(); ++i)
        for (int v : partition.part(i)) part_index_of[v] = i;
    return part_index_of;
}

}  // namespace

int citations(const CitationGraph& g, const Partition& partition,
              const std::vector<int>& part, Measure measure) {
    switch (measure) {
        case Measure::sum: return sum_citations(g, part);
        case Measure::union_: return union_citations(g, part);
        case Measure::fusion: {
            std::vector<int> sorted = part;
            std::sort(sorted.begin(), sorted.end());
            int own = partition.find_part(sorted);
            if (own < 0)
                throw std::invalid_argument("fusion citations: part not in partition");
            return fusion_citations(g, sorted, own, build_part_index(g, partition));
        }
    }
    throw std::invalid_argument("unknown measure");
}

std::vector<int> part_citations(const CitationGraph& g,
                                const Partition& partition, Measure measure) {
    std::vector<int> counts;
    counts.reserve(partition.part_count());
    if (measure == Measure::fusion) {
        std::vector<int> part_index_of = build_part_index(g, partition);
        for (int i = 0; i < partition.part_count(); ++i)
            counts.push_back(
                fusion_citations(g, partition.part(i), i, part_index_of));
        return counts;
    }
    for (const auto& p : partition.parts())
        counts.push_back(measure == Measure::sum ? sum_citations(g, p)
                                                 : union_citations(g, p));
    return counts;
}

int h_index_of_counts(const std::vector<int>& counts) {
    std::vector<int> sorted = counts;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    int h = 0;
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
        if (sorted[i] >= i + 1) h = i + 1;
    return h;
}

int h_index(const CitationGraph& g, const Partition& partition, Measure measure) {
    return h_index_of_counts(part_citations(g, partition, measure));
}

}  // namespace hsplit
