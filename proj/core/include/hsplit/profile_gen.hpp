// Synthetic-profile pipeline: title-based compatibility graphs, greedy
// maximal-clique merging, and seeded random instance skeletons for tests.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hsplit/reductions.hpp"

namespace hsplit {

struct TitledArticle {
    std::string id;
    std::string title;
};

// One `<id><TAB><title>` record per line; `#` lines and blank lines skipped.
std::vector<TitledArticle> parse_titles(std::istream& in);

// Lowercase alphanumeric tokens of a title, deduplicated and sorted.
std::vector<std::string> title_words(const std::string& title);

// Exact rational in [0,1] parsed from a decimal literal ("0", "1", "0.4").
// Threshold comparisons must not see floating point, so the fraction is kept
// as written.
struct Rational {
    long long num = 0;
    long long den = 1;
    static Rational parse(const std::string& text);
};

// Vertex i+1 stands for articles[i]; edge {u, v} iff
// |T(u) ∩ T(v)| * den >= num * |T(u) ∪ T(v)|, evaluated in integers.
// Raising the threshold never adds an edge.
UndirectedGraph compatibility_graph(const std::vector<TitledArticle>& articles,
                                    Rational t);

// Greedy maximal-clique cover: while edges remain, seed a clique at the
// smallest vertex of maximum remaining degree, repeatedly add the smallest
// remaining vertex adjacent to every member, emit, and delete it.  Returns
// the cliques in emission order (members ascending), then the leftover
// vertices as singletons in ascending order.
std::vector<std::vector<int>> greedy_merge(const UndirectedGraph& g);

// Seeded random instance skeleton: acyclic citation graph over owned articles
// w1..w<n_articles> and external citers x1..x<n_external>, plus a random
// partition of the owned set.  Identical seeds give identical output.
struct GeneratedProfile {
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> arcs;
    std::vector<std::string> owned;
    std::vector<std::vector<std::string>> parts;  // multi-member parts only
};

GeneratedProfile random_profile(int n_articles, int n_external,
                                double arc_density, double merge_rate,
                                std::uint64_t seed);

}  // namespace hsplit
