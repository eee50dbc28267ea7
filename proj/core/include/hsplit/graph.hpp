#ifndef HSPLIT_GRAPH_HPP
#define HSPLIT_GRAPH_HPP

#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hsplit {

// Directed citation graph over named articles.  An arc (u, v) means
// "u cites v".  Immutable after construction.
//
// Articles are interned: ids are sorted lexicographically and addressed by
// dense index, so "ascending index" and "ascending id" coincide.  Every
// deterministic tie-break in the library leans on that property.
class CitationGraph {
public:
    // Validates: non-empty whitespace-free unique ids, declared endpoints,
    // no self-loops, no duplicate arcs.  Throws ParseError on violation.
    CitationGraph(std::vector<std::string> ids,
                  const std::vector<std::pair<std::string, std::string>>& arcs);

    CitationGraph() = default;

    int article_count() const { return static_cast<int>(ids_.size()); }
    int arc_count() const { return arc_count_; }

    const std::string& id(int v) const { return ids_[v]; }
    const std::vector<std::string>& ids() const { return ids_; }

    // Index of an id, or -1 if unknown.
    int index_of(const std::string& id) const;

    // Articles citing v, ascending.
    std::span<const int> citers(int v) const { return citers_[v]; }
    // Articles cited by v, ascending.
    std::span<const int> cited_by(int v) const { return cites_[v]; }

    int indegree(int v) const { return static_cast<int>(citers_[v].size()); }

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> citers_;
    std::vector<std::vector<int>> cites_;
    int arc_count_ = 0;
};

}  // namespace hsplit

#endif
