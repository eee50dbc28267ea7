#ifndef HSPLIT_INSTANCE_HPP
#define HSPLIT_INSTANCE_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "hsplit/graph.hpp"
#include "hsplit/partition.hpp"

namespace hsplit {

// Splitting regime: atomizing splits a part into singletons, extracting
// peels single articles off (at most one non-singleton remainder per
// original part), dividing refines arbitrarily.
enum class Operation { atomizing, extracting, dividing };

// plain: any number of parts may change; conservative: at most k original
// parts change; cautious: at most k splitting operations.
enum class Variant { plain, conservative, cautious };

// sum: total citations of members; union_: distinct citing articles;
// fusion: distinct citers outside the owned set plus citing parts.
enum class Measure { sum, union_, fusion };

const char* to_string(Operation op);
const char* to_string(Variant variant);
const char* to_string(Measure measure);

struct ProblemInstance {
    CitationGraph graph;
    Profile profile;
    Operation operation = Operation::atomizing;
    Variant variant = Variant::plain;
    Measure measure = Measure::sum;
    int h = 0;
    std::optional<int> k;  // present iff variant != plain

    // Validates h/k ranges and, for atomizing, folds cautious into
    // conservative (one operation per changed part, so the bounds agree).
    static ProblemInstance make(CitationGraph graph, Profile profile,
                                Operation op, Variant variant, Measure measure,
                                int h, std::optional<int> k);

    int article_count() const { return graph.article_count(); }
    int arc_count() const { return graph.arc_count(); }
    int max_part_size() const;
};

// Line-based instance format:
//   # comment
//   article <id>
//   cite <citing-id> <cited-id>
//   own <id>
//   part <id> <id> ...
//   problem <atomizing|extracting|dividing>
//   variant <plain|conservative|cautious>   (defaults to plain)
//   measure <sum|union|fusion>
//   h <int>
//   k <int>                                  (required iff variant != plain)
// Owned articles outside every part line become singleton parts.
ProblemInstance parse_instance(std::istream& in);
ProblemInstance parse_instance_text(const std::string& text);
ProblemInstance parse_instance_file(const std::string& path);

// Canonical text form; parse(serialize(x)) reproduces x exactly.
// Singleton parts are left implicit.
std::string serialize_instance(const ProblemInstance& inst);

// Witness output: "hindex <h>" followed by one "part <id>..." line per part.
std::string format_refinement(const CitationGraph& g, const Partition& r, int hindex);

}  // namespace hsplit

#endif
